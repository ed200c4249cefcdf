//! Convolution profiles: the full distribution of pair sums, differences,
//! and triple sums of a set, not just the g-value maximum. The unreduced
//! Singer blocks mod q^3-1 keep their three-fold sum counts uniformly
//! bounded (at most 81 for a union of three), which is the combinatorial
//! core of the sharper density bounds.

use sidon::construct::singer_block;
use sidon::field::make_field_over;
use sidon::sets::CyclicSet;

fn three_blocks(q: u64) -> sidon::Result<CyclicSet> {
    let ctx = make_field_over(q, 3, None)?;
    let mut acc = singer_block(&ctx, (1, 0))?;
    for pair in [(1, 1), (1, 2)] {
        acc = acc.union(&singer_block(&ctx, pair)?)?;
    }
    Ok(acc)
}

fn main() -> sidon::Result<()> {
    let s = three_blocks(3)?;
    println!("three Singer blocks over F_27: {s}");
    println!("|S| = {}, g = {}", s.len(), s.g_value());

    let pairs = s.sum_convolution()?;
    println!(
        "\npair sums:   max multiplicity {:>2}, total {} = |S|^2",
        pairs.max_count(),
        pairs.total()
    );

    let triples = s.triple_convolution()?;
    println!(
        "triple sums: max multiplicity {:>2}, total {} = |S|^3",
        triples.max_count(),
        triples.total()
    );

    // the maximum stays <= 81 as the field grows
    println!();
    for q in [3, 4, 5, 7] {
        let s = three_blocks(q)?;
        let m = s.triple_convolution_max()?;
        println!(
            "q = {q}: |S| = {:>2} in Z_{:>3}, triple max {m}",
            s.len(),
            s.modulus()
        );
        assert!(m <= 81);
    }
    Ok(())
}

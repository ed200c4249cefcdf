//! Singer's construction in F_{q^3}: each projective pair (a,b) selects a
//! block of q+1 residues mod q^2+q+1 forming a perfect difference set; a
//! union over |K| pairs has |K|q + 1 elements and g-value <= 2|K|^2.

use sidon::construct::{singer, singer_components};
use sidon::field::{make_field, Poly};

fn main() -> sidon::Result<()> {
    let ctx = make_field(11, 3, Some(Poly::parse("x^3+x^2+6x+4", 11)?))?;
    let pairs = [(1, 1), (1, 2)];
    for (pair, comp) in pairs.iter().zip(singer_components(&ctx, &pairs)?) {
        println!(
            "block {:?}: {} elements, g = {}",
            pair,
            comp.len(),
            comp.g_value()
        );
    }

    let union = singer(&ctx, &pairs)?;
    println!("union: {union}");
    println!(
        "|S| = {} = |K| q + 1 (blocks share the point from the common line), g = {} <= 8",
        union.len(),
        union.g_value()
    );

    // the classic single-block case is a planar difference set: every
    // nonzero residue mod q^2+q+1 appears exactly once as a difference
    let one = singer(&ctx, &[(1, 0)])?;
    println!(
        "\nsingle block: {} elements mod {}, g = {} (perfect difference set)",
        one.len(),
        one.modulus(),
        one.g_value()
    );
    Ok(())
}

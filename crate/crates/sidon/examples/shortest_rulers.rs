//! Exhaustive enumeration of the shortest Sidon sets: for each k, the
//! minimal span a k-element Sidon set of integers can have, with every
//! solution up to translation and reflection. (These are the optimal
//! Golomb rulers, mark count k.)

use sidon::search::{enumerate_shortest_sidon, DEFAULT_BUDGET};

fn main() -> sidon::Result<()> {
    for k in 2..=8 {
        let cert = enumerate_shortest_sidon(k, DEFAULT_BUDGET)?;
        println!(
            "k = {k}: span {} ({} solution{}, {} nodes)",
            cert.value,
            cert.witness_count,
            if cert.witness_count == 1 { "" } else { "s" },
            cert.nodes_explored
        );
        for w in &cert.witnesses {
            println!("    {w}");
        }
    }
    Ok(())
}

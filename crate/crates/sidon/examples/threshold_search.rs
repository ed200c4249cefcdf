//! Branch-and-bound thresholds: the least container that fits k elements
//! with g-value at most g, for intervals [1, n] and cyclic groups Z_n.
//! Every search returns a certificate with a witness, the node count, and
//! an exhaustion flag; a result is claimed optimal only when exhausted.

use sidon::search::{max_size_cyclic, min_n_cyclic, min_n_linear, DEFAULT_BUDGET};

fn main() -> sidon::Result<()> {
    println!("least n with k elements in [1, n]:");
    println!("{:>4} {:>3} {:>5}  witness", "g", "k", "n");
    for (g, k) in [(2, 8), (3, 8), (4, 9), (6, 9)] {
        let cert = min_n_linear(g, k, DEFAULT_BUDGET)?;
        assert!(cert.exhausted);
        println!(
            "{g:>4} {k:>3} {:>5}  {}",
            cert.value,
            cert.witnesses.first().unwrap()
        );
    }

    println!("\nleast n with k elements in Z_n:");
    println!("{:>4} {:>3} {:>5}  witness", "g", "k", "n");
    for (g, k) in [(2, 7), (3, 8), (5, 10)] {
        let cert = min_n_cyclic(g, k, DEFAULT_BUDGET)?;
        assert!(cert.exhausted);
        println!(
            "{g:>4} {k:>3} {:>5}  {}",
            cert.value,
            cert.witnesses.first().unwrap()
        );
    }

    // the dual question: the largest Sidon set inside a fixed group
    let cert = max_size_cyclic(2, 21, DEFAULT_BUDGET)?;
    println!(
        "\nlargest Sidon subset of Z_21: {} elements, e.g. {}",
        cert.value,
        cert.witnesses.first().unwrap()
    );

    // a tiny budget yields an honest partial answer instead of a wrong one
    let truncated = min_n_linear(2, 9, 1_000)?;
    println!(
        "\nbudget 1000 on (g=2, k=9): exhausted = {}, proven n > {}",
        truncated.exhausted, truncated.value
    );
    Ok(())
}

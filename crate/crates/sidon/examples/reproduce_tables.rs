//! Recomputing the bundled reference tables from scratch: spans of shortest
//! Sidon sets (table 1) and least-container thresholds, linear (table 2)
//! and cyclic (table 3). Each cell is searched independently and diffed
//! against the stored value; truncated searches are reported as such
//! rather than guessed.

use sidon::search::DEFAULT_BUDGET;
use sidon::tables::{mismatch_count, reproduce_table};

fn main() -> sidon::Result<()> {
    for which in [1, 2, 3] {
        let cells = reproduce_table(which, DEFAULT_BUDGET)?;
        let exhausted = cells.iter().filter(|c| c.exhausted).count();
        let confirmed = cells.iter().filter(|c| c.matches == Some(true)).count();
        println!(
            "table {which}: {} cells, {exhausted} exhausted, {confirmed} confirmed, {} mismatches",
            cells.len(),
            mismatch_count(&cells)
        );
    }

    // a closer look at one table 2 row: g = 4, increasing k
    println!("\ntable 2, g = 4:");
    let cells = reproduce_table(2, DEFAULT_BUDGET)?;
    for c in cells.iter().filter(|c| c.g == 4) {
        println!(
            "  k = {}: expected {:>2}, computed {:>2} ({} nodes)  {}",
            c.k, c.expected, c.computed, c.nodes, c.witness
        );
    }
    Ok(())
}

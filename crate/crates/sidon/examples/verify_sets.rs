//! Exact verification: g_value computes the maximum number of ordered
//! representations a + b with a, b in S of any value (s + s counts once,
//! s + s' twice), by direct convolution. Works for integer sets and for
//! residues mod n, where sums wrap.

use sidon::sets::{AnySet, CyclicSet, IntegerSet};

fn main() -> sidon::Result<()> {
    let s: IntegerSet = "{1, 2, 5, 11, 13, 18}".parse()?;
    println!("{s}: g = {} (a 6-element Sidon set)", s.g_value());

    // the same residues wrap mod 19 and collide
    let c = CyclicSet::new(19, s.elements())?;
    println!("{c}: g = {}", c.g_value());

    // the profile shows where the collisions happen
    let profile = c.sum_convolution()?;
    let worst = profile
        .counts()
        .iter()
        .max_by_key(|(_, &count)| count)
        .unwrap();
    println!("  residue {} has {} ordered representations", worst.0, worst.1);

    // parsing infers the domain from the literal
    for text in ["{0, 1, 3}", "{0, 1, 3} mod 7", "{0, 1, 3} mod 6"] {
        let set: AnySet = text.parse()?;
        println!("{set}: g = {}", set.g_value());
    }
    Ok(())
}

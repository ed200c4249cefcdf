//! Ruzsa's construction: for a prime p and primitive root theta, each index
//! t gives a Sidon set mod p(p-1); a union over K keeps g-value <= 2|K|^2.

use sidon::construct::{ruzsa, ruzsa_components, ruzsa_default_theta};

fn main() -> sidon::Result<()> {
    let p = 11;
    let theta = ruzsa_default_theta(p)?;
    println!("p = {p}, least primitive root theta = {theta}");

    let k_set = [1, 2];
    for (t, comp) in k_set.iter().zip(ruzsa_components(p, theta, &k_set)?) {
        println!("  component t={t}: {comp}  (g = {})", comp.g_value());
    }

    let union = ruzsa(p, theta, &k_set)?;
    println!("union: {union}");
    println!(
        "|S| = {} = |K|(p-1), g = {} <= 2|K|^2 = {}",
        union.len(),
        union.g_value(),
        2 * k_set.len() * k_set.len()
    );

    // the density scales: a bigger prime, three components
    let p = 101;
    let theta = ruzsa_default_theta(p)?;
    let big = ruzsa(p, theta, &[1, 2, 3])?;
    println!(
        "\np = {p}, K = {{1,2,3}}: {} elements mod {}, g = {}",
        big.len(),
        big.modulus(),
        big.g_value()
    );
    Ok(())
}

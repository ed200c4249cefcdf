//! Combining two cyclic sets with coprime moduli: the Chinese remainder
//! preimage of M x S in Z_{yz} multiplies cardinalities and g-values.

use sidon::construct::{crt_combine, singer};
use sidon::field::make_field;
use sidon::sets::CyclicSet;

fn main() -> sidon::Result<()> {
    let m: CyclicSet = "{0, 1, 3} mod 7".parse()?;
    let s = singer(&make_field(3, 3, None)?, &[(1, 0)])?; // 4 elements mod 13
    println!("M = {m}  (g = {})", m.g_value());
    println!("S = {s}  (g = {})", s.g_value());

    let t = crt_combine(&m, &s)?;
    println!("combined: {t}");
    println!(
        "|T| = {} = |M||S|, modulus {} = 7*13, g = {} <= g(M) g(S) = {}",
        t.len(),
        t.modulus(),
        t.g_value(),
        m.g_value() * s.g_value()
    );

    // coprimality is required, and checked
    let other: CyclicSet = "{0, 2} mod 21".parse()?;
    match crt_combine(&t, &other) {
        Err(e) => println!("\nmod 91 with mod 21 share a factor: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

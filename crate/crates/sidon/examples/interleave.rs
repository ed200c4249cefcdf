//! Interleaving a cyclic set M mod y with a finite integer set S': placing a
//! translated copy of M inside each gap block indexed by S' gives an integer
//! set whose g-value is at most g(M) g(S'). This turns one good cyclic set
//! into arbitrarily long integer sets of the same density.

use sidon::construct::{bose, interleave_linear};
use sidon::field::make_field;
use sidon::sets::IntegerSet;

fn main() -> sidon::Result<()> {
    let m = bose(&make_field(5, 2, None)?, &[1])?; // 5 elements mod 24
    let s: IntegerSet = "{1, 2, 5, 7}".parse()?;
    println!("M  = {m}  (g = {})", m.g_value());
    println!("S' = {s}  (g = {})", s.g_value());

    let t = interleave_linear(&m, &s)?;
    println!("interleaved: {t}");
    println!(
        "|T| = {} = |M||S'|, span {}, g = {} <= g(M) g(S') = {}",
        t.len(),
        t.span(),
        t.g_value(),
        m.g_value() * s.g_value()
    );

    // iterate: feed the output back in as the integer part
    let t2 = interleave_linear(&m, &t)?;
    println!(
        "\ntwice interleaved: {} elements, span {}, g = {} <= {}",
        t2.len(),
        t2.span(),
        t2.g_value(),
        m.g_value() * t.g_value()
    );
    Ok(())
}

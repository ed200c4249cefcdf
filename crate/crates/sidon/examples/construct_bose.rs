//! Bose's construction in F_{q^2}: the elements theta^i with trace-like
//! projection hitting a fixed line form a Sidon set of size q in Z_{q^2-1};
//! scaling the line by k in K unions to g-value <= 2|K|^2.

use sidon::construct::bose;
use sidon::field::{make_field, make_field_over, Poly};

fn main() -> sidon::Result<()> {
    // explicit irreducible modulus over F_11
    let ctx = make_field(11, 2, Some(Poly::parse("x^2+3x+6", 11)?))?;
    let s = bose(&ctx, &[1, 2])?;
    println!("F_121 via {}: {s}", ctx.modulus());
    println!(
        "|S| = {} = |K| q, g = {} <= 2|K|^2 = 8",
        s.len(),
        s.g_value()
    );

    // no modulus given: one is found by search
    let ctx = make_field(13, 2, None)?;
    let s = bose(&ctx, &[1])?;
    println!(
        "\nF_169 via {}: {} elements mod {}, g = {} (a Sidon set)",
        ctx.modulus(),
        s.len(),
        s.modulus(),
        s.g_value()
    );

    // prime-power base field: F_9 is built over F_3 transparently
    let ctx = make_field_over(9, 2, None)?;
    let s = bose(&ctx, &[1, 2, 4])?;
    println!(
        "\nF_81 over F_3 via {}: {} elements mod {}, g = {} <= 18",
        ctx.modulus(),
        s.len(),
        s.modulus(),
        s.g_value()
    );
    Ok(())
}

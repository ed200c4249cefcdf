//! Closed-form upper bounds on C(g,n), the largest subset of Z_n with
//! g-value at most g, checked against exhaustive search at desk scale.
//! At n = q^2 + q + 1 the g = 2 bound is met exactly by a Singer block.

use sidon::bounds::c_upper_bound;
use sidon::construct::singer;
use sidon::field::make_field_over;
use sidon::search::{max_size_cyclic, DEFAULT_BUDGET};

fn main() -> sidon::Result<()> {
    println!("{:>3} {:>3}  {:>5} {:>5}", "g", "n", "C", "bound");
    for g in 2..=5 {
        for n in [10, 15, 20, 25] {
            let exact = max_size_cyclic(g, n, DEFAULT_BUDGET)?;
            assert!(exact.exhausted);
            let bound = c_upper_bound(g, n)?;
            assert!(exact.value <= bound);
            println!("{g:>3} {n:>3}  {:>5} {bound:>5}", exact.value);
        }
    }

    println!("\ntight cases: Singer blocks in Z_{{q^2+q+1}} meet the g = 2 bound");
    for q in [2, 3, 5, 7, 8, 9] {
        let block = singer(&make_field_over(q, 3, None)?, &[(1, 0)])?;
        let n = block.modulus();
        let bound = c_upper_bound(2, n)?;
        assert_eq!(block.len() as u64, bound);
        println!("  q = {q}: |block| = {} = bound at n = {n}", block.len());
    }
    Ok(())
}

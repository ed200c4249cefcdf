//! The four-block integer family: for each g >= 1 it packs
//! r = g + 2 floor(g/3) + floor(g/6) elements into [0, x-1] with
//! x = 3g - floor(g/3) + 1 while keeping g-value <= g. Its density
//! r/sqrt(g x) stays above 11/sqrt(96) - o(1), which is what drives
//! the asymptotic lower bounds.

use sidon::construct::block_set;

fn main() -> sidon::Result<()> {
    println!("{:>4} {:>5} {:>5} {:>3}  density r/sqrt(gx)", "g", "x", "r", "gv");
    for g in [1, 2, 3, 6, 12, 30, 60, 600, 6000] {
        let s = block_set(g)?;
        let r = s.len() as u64;
        let x = s.max().unwrap() + 1;
        let gv = s.g_value();
        assert!(gv <= g);
        let density = r as f64 / ((g * x) as f64).sqrt();
        println!("{g:>4} {x:>5} {r:>5} {gv:>3}  {density:.6}");
    }
    println!("\nlimit: 11/sqrt(96) = {:.6}", 11.0 / 96f64.sqrt());
    Ok(())
}

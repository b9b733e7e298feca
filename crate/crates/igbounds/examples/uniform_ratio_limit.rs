//! For a < -1 the pair (g_lo, g_hi) brackets Γ(a,x) with a worst-case ratio
//! that tends to 1 as a → -∞, uniformly in x: the maximum of g_hi/g_lo over
//! x > 0 sits at x = √(a(a+1)) and equals 2/(1+√(1+1/a)).
//!
//! Run: `cargo run --example uniform_ratio_limit`

use igbounds::analysis::max_ratio_brackets;

fn main() -> Result<(), igbounds::Error> {
    println!(
        "{:>8} {:>18} {:>18} {:>14} {:>14}",
        "a", "argmax (numeric)", "√(a(a+1))", "max ratio", "2/(1+√(1+1/a))"
    );
    for a in [-2.0, -5.0, -20.0, -50.0, -200.0, -500.0] {
        let (argmax, maximum) = max_ratio_brackets(a)?;
        let closed_x = (a * (a + 1.0)).sqrt();
        let closed_m = 2.0 / (1.0 + (1.0 + 1.0 / a).sqrt());
        println!("{a:>8} {argmax:>18.10} {closed_x:>18.10} {maximum:>14.10} {closed_m:>14.10}");
    }
    println!("\nthe maxima decrease monotonically toward 1: both bounds become");
    println!("asymptotically sharp simultaneously for every x as a -> -inf");
    Ok(())
}

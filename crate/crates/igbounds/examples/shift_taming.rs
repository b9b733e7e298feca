//! The shift machinery: transporting a bound across integer steps of the
//! order, and how a forward shift tames relative error for large orders.
//!
//! For a ≥ k the forward k-shift can only shrink |δ|; shifting G down into
//! (1,2] and g down into (2,3] gives a bracketing pair whose relative errors
//! stay bounded as a grows, while the unshifted pair explodes.
//!
//! Run: `cargo run --example shift_taming`

use igbounds::analysis::taming_chain;
use igbounds::bounds::{forward_shift, small_g, tamed_lower_shift, tamed_upper_shift};
use igbounds::oracle::igamma_ref;

fn main() -> Result<(), igbounds::Error> {
    // forward shift of an exact base is exact: rebuild Γ(7.5, 2) from Γ(4.5, 2)
    let rebuilt = forward_shift(|a, x| Ok(igamma_ref(a, x)?.value()), 7.5, 3, 2.0)?;
    let direct = igamma_ref(7.5, 2.0)?.value();
    println!("shift identity:  rebuilt {rebuilt:.15e}  direct {direct:.15e}");

    // the four-way chain dg_(a-k) <= dg_(a;k) <= 0 <= dG_(a;k) <= dG_(a-k)
    println!("\ntaming chains at x = 2 (k chosen so a-k lands in (3,4]):");
    for a in [4.5, 7.5, 12.25] {
        let k = (a as f64).ceil() as u32 - 4;
        let (dg_base, dg_shift, dbig_shift, dbig_base) = taming_chain(a, k, 2.0)?;
        println!(
            "a={a:>5}, k={k}:  {dg_base:>12.3e} <= {dg_shift:>12.3e} <= 0 <= {dbig_shift:>11.3e} <= {dbig_base:>11.3e}"
        );
    }

    // tamed vs plain upper bound at a growing order
    println!("\nupper-bound relative error, plain g vs tamed shift of g:");
    for a in [5.0f64, 8.0, 12.0] {
        let x = a - 1.0;
        let o = igamma_ref(a, x)?.value();
        let plain = (small_g(a, x)? - o) / o;
        let k_lo = tamed_lower_shift(a);
        let k_hi = tamed_upper_shift(a);
        let tamed = (igbounds::bounds::tamed_upper(a, x)? - o) / o;
        println!(
            "a={a:>4}: plain δg = {plain:>10.3e}   tamed δ = {tamed:>10.3e}   (k_lower={k_lo}, k_upper={k_hi})"
        );
    }
    Ok(())
}

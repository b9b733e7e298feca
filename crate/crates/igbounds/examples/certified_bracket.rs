//! Certified two-sided enclosures of Γ(a,x) across the case regions of `a`,
//! with the family that produced each side.
//!
//! Run: `cargo run --example certified_bracket`

use igbounds::bounds::{bracket, Mode};
use igbounds::oracle::igamma_ref;

fn main() -> Result<(), igbounds::Error> {
    let points = [
        (-7.5, 1.0),
        (-1.5, 0.5),
        (-0.5, 2.0),
        (0.0, 1.0),
        (0.5, 0.1),
        (1.0, 2.0),
        (1.5, 1.0),
        (2.5, 4.0),
        (3.0, 2.0),
        (7.5, 3.0),
    ];
    println!(
        "{:>6} {:>6}  {:>24} {:>24} {:>24}  provenance",
        "a", "x", "lower", "Γ(a,x)", "upper"
    );
    for (a, x) in points {
        let br = bracket(a, x, Mode::Plain)?;
        let oracle = igamma_ref(a, x)?;
        assert!(br.lower <= oracle.value() && oracle.value() <= br.upper);
        println!(
            "{a:>6} {x:>6}  {:>24.16e} {:>24.16e} {:>24.16e}  [{}, {}]",
            br.lower,
            oracle.value(),
            br.upper,
            br.lower_spec.family.name(),
            br.upper_spec.family.name(),
        );
    }
    Ok(())
}

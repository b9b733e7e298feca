//! Run the full inequality verification sweep on the standard grid:
//! bracket enclosure with strictness margins, the per-region orderings, and
//! the direction sign of every family, all against the cross-checked oracle.
//!
//! Run: `cargo run --release --example verify_suite`

use igbounds::analysis::{verify_all, Fixture, GridSpec};
use igbounds::bounds::Mode;

fn main() -> Result<(), igbounds::Error> {
    let grid = GridSpec::standard();
    for mode in [Mode::Plain, Mode::Tamed] {
        let report = verify_all(&grid, mode, Fixture::None)?;
        println!(
            "{mode}: {} grid points checked, {} violations",
            report.points_checked,
            report.violations.len()
        );
        for v in &report.violations {
            println!("  {v}");
        }
    }
    Ok(())
}

//! Signed relative errors of every applicable bound family on a small grid,
//! printed as CSV (the same format as `igbounds table`).
//!
//! Run: `cargo run --example error_table`

use igbounds::analysis::{figure_data, log_grid};

fn main() -> Result<(), igbounds::Error> {
    let records = figure_data(&[-2.5, 0.5, 2.5], &log_grid(1e-2, 1e2, 5))?;
    println!("a,x,bound,direction,value,oracle,delta,delta_rel");
    for r in &records {
        println!(
            "{:.16e},{:.16e},{},{},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.a, r.x, r.family.name(), r.direction, r.bound_value, r.oracle_value, r.delta,
            r.delta_rel
        );
    }
    Ok(())
}

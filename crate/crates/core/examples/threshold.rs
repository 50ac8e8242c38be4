//! Bisection for the noise level where the product state overtakes the Bell
//! state, and for the point where one-sided noise leaves exactly one bit.

use densecode::analysis::{find_classical_limit_crossing, find_threshold_alpha};

pub fn run() -> densecode::Result<()> {
    for (label, r) in [
        ("threshold", find_threshold_alpha()?),
        ("one-bit crossing", find_classical_limit_crossing()?),
    ] {
        println!(
            "{label}: p = {:.10} after {} iterations (bracket [{}, {}], |f| = {:.1e})",
            r.root, r.iterations, r.bracket.0, r.bracket.1, r.residual
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    run()
}

//! Random-restart search over unitary encodings, compared against the
//! closed-form capacity that the Weyl encoding attains.

use densecode::channels::one_sided_depolarizing;
use densecode::coding::{brute_force_best_encoding, capacity_bell_one_sided_dep2};
use densecode::qops::bell_density;

pub fn run(restarts: usize) -> densecode::Result<()> {
    let bell = bell_density(2)?;
    for p in [0.1, 0.3, 0.7] {
        let ch = one_sided_depolarizing(2, p)?;
        let report = brute_force_best_encoding(&bell, &ch, 4, restarts, 1)?;
        let formula = capacity_bell_one_sided_dep2(p)?;
        println!(
            "p = {p}: best χ {:.9} (restart {}), formula {formula:.9}, gap {:.2e}",
            report.best_chi,
            report.best_restart,
            formula - report.best_chi
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    let restarts = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    run(restarts)
}

//! Runs the registered property checks and prints one line per property.

use densecode::verify::run_all;

pub fn run(seed: u64) -> bool {
    let reports = run_all(seed);
    for r in &reports {
        let verdict = if r.passed { "ok" } else { "FAIL" };
        println!("{verdict:>4} {:<14} {:<34} residual {:.2e} ({} trials)", r.module, r.name, r.residual, r.trials);
    }
    reports.iter().all(|r| r.passed)
}

#[allow(dead_code)]
fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    std::process::exit(if run(seed) { 0 } else { 1 });
}

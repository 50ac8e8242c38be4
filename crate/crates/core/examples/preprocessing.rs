//! Local pre-processing on Alice's side before two-sided noise: past the
//! threshold, destroying the entanglement first beats sending the Bell state.

use densecode::channels::two_sided_depolarizing;
use densecode::coding::{builtin_candidates, capacity_bell_two_sided_dep2, preprocessing_capacity};
use densecode::qops::bell_density;

pub fn run() -> densecode::Result<()> {
    let bell = bell_density(2)?;
    let candidates = builtin_candidates(2)?;
    println!("{} candidate maps", candidates.len());
    for p in [0.1, 0.3, 0.4, 0.6, 0.8] {
        let r = preprocessing_capacity(&bell, &two_sided_depolarizing(2, p)?, &candidates)?;
        println!(
            "p = {p}: {:.6} bits via {:<20} (unprocessed {:.6})",
            r.value,
            r.label,
            capacity_bell_two_sided_dep2(p)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    run()
}

//! Capacities of the Bell state under the standard noise families, computed
//! both by closed form and by the general entropy path.

use densecode::channels::{one_sided_depolarizing, two_sided_depolarizing};
use densecode::coding::{
    capacity_bell_one_sided_dep2, capacity_bell_two_sided_dep2, capacity_noiseless, capacity_unital,
    classical_dep2_capacity,
};
use densecode::qops::bell_density;

pub fn run() -> densecode::Result<()> {
    let bell = bell_density(2)?;
    println!("noiseless: {:.6} bits", capacity_noiseless(&bell)?);
    println!("{:>5} {:>12} {:>12} {:>12}", "p", "one-sided", "two-sided", "classical");
    for p in [0.0, 0.1, 0.252, 0.345, 0.5, 0.8, 1.0] {
        let one = capacity_unital(&bell, &one_sided_depolarizing(2, p)?)?;
        let two = capacity_unital(&bell, &two_sided_depolarizing(2, p)?)?;
        assert!((one.value - capacity_bell_one_sided_dep2(p)?).abs() < 1e-9);
        assert!((two.value - capacity_bell_two_sided_dep2(p)?).abs() < 1e-9);
        println!("{p:>5} {:>12.6} {:>12.6} {:>12.6}", one.value, two.value, classical_dep2_capacity(p)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    run()
}

//! Loads a qutrit Pauli table from JSON and evaluates the Bell and Werner
//! capacities under one-sided noise.

use densecode::channels::{one_sided_pauli, PauliSpec};
use densecode::coding::{capacity_unital, capacity_werner_one_sided_pauli};
use densecode::qops::{bell_density, werner_state};

const SPEC: &str = r#"{"d": 3, "q": [[0.82, 0.03, 0.03], [0.02, 0.02, 0.02], [0.02, 0.02, 0.02]]}"#;

pub fn run() -> densecode::Result<()> {
    let spec: PauliSpec = serde_json::from_str(SPEC)?;
    let ch = one_sided_pauli(&spec)?;
    let bell = capacity_unital(&bell_density(3)?, &ch)?;
    println!("bell: {:.6} bits (noiseless {:.6})", bell.value, 2.0 * 3f64.log2());
    for eta in [1.0, 0.75, 0.5, 0.25] {
        let general = capacity_unital(&werner_state(3, eta)?, &ch)?.value;
        let closed = capacity_werner_one_sided_pauli(3, eta, &spec)?;
        println!("werner η = {eta}: {general:.6} bits (closed form {closed:.6})");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> densecode::Result<()> {
    run()
}

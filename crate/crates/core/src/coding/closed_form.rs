//! Closed-form capacities for Bell, Werner and Schmidt-parameterized inputs.

use serde::{Deserialize, Serialize};

use crate::channels::{PauliSpec, PauliTable};
use crate::error::{check_range, Error, Result};
use crate::linalg::{shannon_entropy, xlog2x};

fn one_sided_table(spec: &PauliSpec) -> Result<&[f64]> {
    match spec.table() {
        PauliTable::OneSided(q) => Ok(q),
        PauliTable::Joint(_) => Err(Error::InvalidArgument("a one-sided Pauli table is required".into())),
    }
}

/// Bell state through a one-sided Pauli channel: `log₂ d² − H({q_mn})`.
pub fn capacity_bell_one_sided_pauli(spec: &PauliSpec) -> Result<f64> {
    let q = one_sided_table(spec)?;
    let d2 = (spec.d() * spec.d()) as f64;
    Ok(d2.log2() - shannon_entropy(q)?)
}

/// Werner state of weight `eta` through a one-sided Pauli channel:
/// `log₂ d² − H({(1−η)/d² + η q_mn})`.
pub fn capacity_werner_one_sided_pauli(d: usize, eta: f64, spec: &PauliSpec) -> Result<f64> {
    check_range("eta", eta, 0.0, 1.0)?;
    if spec.d() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: spec.d(),
        });
    }
    let d2 = (d * d) as f64;
    let mixed: Vec<f64> = one_sided_table(spec)?
        .iter()
        .map(|&q| (1.0 - eta) / d2 + eta * q)
        .collect();
    Ok(d2.log2() - shannon_entropy(&mixed)?)
}

/// Output spectra for `|φ_α⟩ = √α|00⟩ + √(1−α)|11⟩` under two-sided qubit
/// depolarizing noise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaSpectra {
    /// Eigenvalues of the joint output, `γ₃ = γ₄`.
    pub gamma: [f64; 4],
    /// Eigenvalues of Bob's reduced output.
    pub xi: [f64; 2],
}

pub fn alpha_eigenvalues(alpha: f64, p: f64) -> Result<AlphaSpectra> {
    check_range("alpha", alpha, 0.0, 1.0)?;
    check_range("p", p, 0.0, 1.0)?;
    let root = (1.0 - 4.0 * p * alpha * (2.0 - p) * (1.0 - alpha)).max(0.0).sqrt();
    let base = 1.0 - p * (1.0 - p / 2.0);
    let g1 = 0.5 * (base + (1.0 - p) * root);
    let g2 = 0.5 * (base - (1.0 - p) * root);
    let g3 = 0.5 * p * (1.0 - p / 2.0);
    let xi1 = alpha - p * alpha + p / 2.0;
    Ok(AlphaSpectra {
        gamma: [g1, g2, g3, g3],
        xi: [xi1, 1.0 - xi1],
    })
}

/// Capacity of `|φ_α⟩` over two-sided qubit depolarizing noise, `α ∈ [0, 1/2]`.
pub fn capacity_alpha(alpha: f64, p: f64) -> Result<f64> {
    check_range("alpha", alpha, 0.0, 0.5)?;
    let s = alpha_eigenvalues(alpha, p)?;
    let xi_term: f64 = s.xi.iter().map(|&x| xlog2x(x)).sum();
    let gamma_term: f64 = s.gamma.iter().map(|&g| xlog2x(g)).sum();
    Ok(1.0 - xi_term + gamma_term)
}

/// Bell state, two-sided qubit depolarizing noise.
pub fn capacity_bell_two_sided_dep2(p: f64) -> Result<f64> {
    check_range("p", p, 0.0, 1.0)?;
    let f = (1.0 - p) * (1.0 - p);
    let a = (1.0 + 3.0 * f) / 4.0;
    let b = (1.0 - f) / 4.0;
    Ok(2.0 + xlog2x(a) + 3.0 * xlog2x(b))
}

/// Classical capacity of the qubit depolarizing channel, `1 − H(p/2)`.
pub fn classical_dep2_capacity(p: f64) -> Result<f64> {
    check_range("p", p, 0.0, 1.0)?;
    Ok(1.0 + xlog2x(p / 2.0) + xlog2x((2.0 - p) / 2.0))
}

/// Bell state, qubit depolarizing noise on Alice's side only.
pub fn capacity_bell_one_sided_dep2(p: f64) -> Result<f64> {
    check_range("p", p, 0.0, 1.0)?;
    Ok(2.0 + xlog2x((4.0 - 3.0 * p) / 4.0) + 3.0 * xlog2x(p / 4.0))
}

/// Depolarizing noise level at which teleportation over a noisy qubit channel
/// hits its classical limit. Reference value only; compare with the dense-coding
/// crossing near 0.252.
pub const TELEPORTATION_CLASSICAL_LIMIT: f64 = 1.0 / 3.0;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::depolarizing_spec;

    fn h2(x: f64) -> f64 {
        if x <= 0.0 || x >= 1.0 {
            0.0
        } else {
            -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
        }
    }

    #[test]
    fn bell_pauli_limits() {
        let ident = PauliSpec::one_sided(3, {
            let mut q = vec![0.0; 9];
            q[0] = 1.0;
            q
        })
        .unwrap();
        assert!((capacity_bell_one_sided_pauli(&ident).unwrap() - 9f64.log2()).abs() < 1e-12);
        let uniform = PauliSpec::one_sided(2, vec![0.25; 4]).unwrap();
        assert!(capacity_bell_one_sided_pauli(&uniform).unwrap().abs() < 1e-12);
    }

    #[test]
    fn bell_pauli_dep_value() {
        // 2 − H({0.775, 0.075, 0.075, 0.075}), the entropy from 50-digit arithmetic
        let c = capacity_bell_one_sided_pauli(&depolarizing_spec(2, 0.3).unwrap()).unwrap();
        assert!((c - (2.0 - 1.125_809_391_675_273_9)).abs() < 1e-12, "{c}");
    }

    #[test]
    fn werner_limits() {
        let spec = PauliSpec::one_sided(2, vec![0.6, 0.2, 0.15, 0.05]).unwrap();
        let w1 = capacity_werner_one_sided_pauli(2, 1.0, &spec).unwrap();
        assert!((w1 - capacity_bell_one_sided_pauli(&spec).unwrap()).abs() < 1e-14);
        assert!(capacity_werner_one_sided_pauli(2, 0.0, &spec).unwrap().abs() < 1e-14);
        assert!(capacity_werner_one_sided_pauli(2, 1.5, &spec).is_err());
        assert!(capacity_werner_one_sided_pauli(3, 0.5, &spec).is_err());
    }

    #[test]
    fn alpha_endpoints() {
        for &p in &[0.0, 0.1, 0.345, 0.7, 1.0] {
            let half = capacity_alpha(0.5, p).unwrap();
            assert!((half - capacity_bell_two_sided_dep2(p).unwrap()).abs() < 1e-12);
            let zero = capacity_alpha(0.0, p).unwrap();
            assert!((zero - classical_dep2_capacity(p).unwrap()).abs() < 1e-12);
        }
        for &a in &[0.0, 0.08, 0.2, 0.5] {
            assert!((capacity_alpha(a, 0.0).unwrap() - (1.0 + h2(a))).abs() < 1e-12);
        }
    }

    #[test]
    fn alpha_spectra_normalized() {
        for i in 0..=10 {
            for j in 0..=10 {
                let s = alpha_eigenvalues(0.05 * i as f64, 0.1 * j as f64).unwrap();
                assert!((s.gamma.iter().sum::<f64>() - 1.0).abs() < 1e-14);
                assert!(s.gamma.iter().all(|&g| g >= 0.0));
            }
        }
    }

    #[test]
    fn alpha_range_checked() {
        assert!(capacity_alpha(0.6, 0.2).is_err());
        assert!(capacity_alpha(0.2, -0.1).is_err());
        assert!(capacity_alpha(f64::NAN, 0.2).is_err());
    }

    #[test]
    fn named_values() {
        assert_eq!(capacity_bell_two_sided_dep2(0.0).unwrap(), 2.0);
        assert!(capacity_bell_two_sided_dep2(1.0).unwrap().abs() < 1e-15);
        assert_eq!(classical_dep2_capacity(0.0).unwrap(), 1.0);
        assert!(classical_dep2_capacity(1.0).unwrap().abs() < 1e-15);
        let expected = 1.0 + 0.25 * 0.25f64.log2() + 0.75 * 0.75f64.log2();
        assert!((classical_dep2_capacity(0.5).unwrap() - expected).abs() < 1e-15);
        assert!((classical_dep2_capacity(0.5).unwrap() - 0.188_721_875_540_867).abs() < 1e-12);
        assert_eq!(capacity_bell_one_sided_dep2(0.0).unwrap(), 2.0);
        assert!(capacity_bell_one_sided_dep2(1.0).unwrap().abs() < 1e-14);
        // reference values from 30-digit arithmetic: C(0.252) and the root of C = 1
        assert!((capacity_bell_one_sided_dep2(0.252).unwrap() - 1.001_067_243_399_605_6).abs() < 1e-12);
        assert!((capacity_bell_one_sided_dep2(0.252_386_166_553_642_4).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_sided_dep_matches_pauli_form() {
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let a = capacity_bell_one_sided_dep2(p).unwrap();
            let b = capacity_bell_one_sided_pauli(&depolarizing_spec(2, p).unwrap()).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }
}

use num_complex::Complex64;

use super::weyl::{check_dim, weyl_operator, WeylIndex};
use crate::error::{check_range, Error, Result};
use crate::linalg::{embed, ComplexMatrix, DensityMatrix, Subsystem};

/// Normalized state vector with subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>, dims: Vec<usize>) -> Result<Self> {
        let n: usize = dims.iter().product();
        if n != amplitudes.len() {
            return Err(Error::DimensionMismatch {
                expected: amplitudes.len(),
                actual: n,
            });
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidArgument(format!("state has squared norm {norm}")));
        }
        Ok(Self { dims, amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(self.projector(), self.dims.clone())
    }
}

/// `|ψ_mn⟩ = (V_mn ⊗ 1)|ψ_00⟩` with `|ψ_00⟩ = Σ_j |jj⟩ / √d`.
pub fn bell_state(d: usize, idx: WeylIndex) -> Result<PureState> {
    check_dim(d)?;
    if idx.d() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: idx.d(),
        });
    }
    let amp = 1.0 / (d as f64).sqrt();
    let mut psi00 = vec![Complex64::new(0.0, 0.0); d * d];
    for j in 0..d {
        psi00[j * d + j] = Complex64::new(amp, 0.0);
    }
    let v = embed(&weyl_operator(idx), Subsystem::A, d);
    Ok(PureState {
        dims: vec![d, d],
        amplitudes: v.apply(&psi00),
    })
}

/// `ρ_00 = |ψ_00⟩⟨ψ_00|`.
pub fn bell_density(d: usize) -> Result<DensityMatrix> {
    Ok(bell_state(d, WeylIndex::new(d, 0, 0)?)?.density())
}

/// `ρ_W = (1 − η)/d² · 1 + η ρ_00`.
pub fn werner_state(d: usize, eta: f64) -> Result<DensityMatrix> {
    check_range("eta", eta, 0.0, 1.0)?;
    let bell = bell_density(d)?;
    let n = d * d;
    let mut m = ComplexMatrix::identity(n).scale_real((1.0 - eta) / n as f64);
    m.add_scaled(eta, bell.matrix());
    Ok(DensityMatrix::from_trusted(m, vec![d, d]))
}

/// `|φ_α⟩ = √(1−α)|00⟩ + √α|11⟩`.
///
/// The physical range is `α ∈ [0, 1/2]`; values in `(1/2, 1]` describe the same
/// family with the Schmidt coefficients swapped and are accepted unchanged.
pub fn schmidt_state(alpha: f64) -> Result<PureState> {
    check_range("alpha", alpha, 0.0, 1.0)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 4];
    amps[0] = Complex64::new((1.0 - alpha).sqrt(), 0.0);
    amps[3] = Complex64::new(alpha.sqrt(), 0.0);
    Ok(PureState {
        dims: vec![2, 2],
        amplitudes: amps,
    })
}

/// Computational basis product state `|k⟩ ⊗ |l⟩`.
pub fn basis_product(d: usize, k: usize, l: usize) -> Result<PureState> {
    check_dim(d)?;
    if k >= d || l >= d {
        return Err(Error::InvalidArgument(format!("basis index out of range for d = {d}")));
    }
    let mut amps = vec![Complex64::new(0.0, 0.0); d * d];
    amps[k * d + l] = Complex64::new(1.0, 0.0);
    Ok(PureState {
        dims: vec![d, d],
        amplitudes: amps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{hermitian_eigenvalues, partial_trace, von_neumann_entropy};

    #[test]
    fn bell_00_d2() {
        let s = bell_state(2, WeylIndex::new(2, 0, 0).unwrap()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = [h, 0.0, 0.0, h];
        for (a, e) in s.amplitudes().iter().zip(expected) {
            assert!((a - e).norm() < 1e-15);
        }
    }

    #[test]
    fn bell_11_is_singlet() {
        let s = bell_state(2, WeylIndex::new(2, 1, 1).unwrap()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = PureState::new(
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(h, 0.0),
                Complex64::new(-h, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            vec![2, 2],
        )
        .unwrap();
        assert!(s.projector().max_abs_diff(&singlet.projector()) < 1e-15);
    }

    #[test]
    fn bell_basis_gram_d3() {
        let states: Vec<_> = WeylIndex::all(3).map(|i| bell_state(3, i).unwrap()).collect();
        for (i, a) in states.iter().enumerate() {
            for (j, b) in states.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((a.inner(b) - expected).norm() < 1e-10);
            }
            for side in [Subsystem::A, Subsystem::B] {
                let red = partial_trace(&a.density(), side).unwrap();
                assert!(red.matrix().max_abs_diff(&ComplexMatrix::identity(3).scale_real(1.0 / 3.0)) < 1e-12);
            }
        }
    }

    #[test]
    fn werner_limits_and_spectrum() {
        let w0 = werner_state(2, 0.0).unwrap();
        assert!(w0.matrix().max_abs_diff(&ComplexMatrix::identity(4).scale_real(0.25)) < 1e-15);
        let w1 = werner_state(3, 1.0).unwrap();
        assert!(w1.matrix().max_abs_diff(bell_density(3).unwrap().matrix()) < 1e-15);
        let s = hermitian_eigenvalues(werner_state(2, 0.5).unwrap().matrix()).unwrap();
        let expected = [0.625, 0.125, 0.125, 0.125];
        for (a, e) in s.eigenvalues.iter().zip(expected) {
            assert!((a - e).abs() < 1e-12);
        }
        assert!(werner_state(2, 1.2).is_err());
    }

    #[test]
    fn schmidt_family() {
        let p = schmidt_state(0.0).unwrap();
        assert!((p.amplitudes()[0] - 1.0).norm() < 1e-15);
        let b = schmidt_state(0.5).unwrap();
        assert!(b.projector().max_abs_diff(bell_density(2).unwrap().matrix()) < 1e-15);
        let r = schmidt_state(0.2).unwrap();
        let red = partial_trace(&r.density(), Subsystem::B).unwrap();
        assert!(red.matrix().max_abs_diff(&ComplexMatrix::diag(&[0.8, 0.2])) < 1e-15);
        let h = -(0.8f64 * 0.8f64.log2() + 0.2 * 0.2f64.log2());
        assert!((von_neumann_entropy(&red) - h).abs() < 1e-12);
        assert!(schmidt_state(0.7).is_ok());
        assert!(schmidt_state(-0.1).is_err());
        assert!(schmidt_state(1.1).is_err());
    }
}

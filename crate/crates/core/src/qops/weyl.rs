use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, MAX_DIM};

/// Index `(m, n)` of the Weyl operator `V_mn` in dimension `d`.
///
/// Operators are enumerated by the flat index `i = m·d + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylIndex {
    m: usize,
    n: usize,
    d: usize,
}

impl WeylIndex {
    pub fn new(d: usize, m: usize, n: usize) -> Result<Self> {
        check_dim(d)?;
        if m >= d || n >= d {
            return Err(Error::InvalidArgument(format!("Weyl index ({m}, {n}) out of range for d = {d}")));
        }
        Ok(Self { m, n, d })
    }

    pub fn from_flat(d: usize, i: usize) -> Result<Self> {
        check_dim(d)?;
        if i >= d * d {
            return Err(Error::InvalidArgument(format!("flat Weyl index {i} out of range for d = {d}")));
        }
        Ok(Self { m: i / d, n: i % d, d })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn flat(&self) -> usize {
        self.m * self.d + self.n
    }

    pub fn is_identity(&self) -> bool {
        self.m == 0 && self.n == 0
    }

    /// All `d²` indices in flat order.
    pub fn all(d: usize) -> impl Iterator<Item = WeylIndex> {
        (0..d * d).map(move |i| WeylIndex { m: i / d, n: i % d, d })
    }
}

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if d < 2 || d * d > MAX_DIM {
        Err(Error::UnsupportedDimension(d))
    } else {
        Ok(())
    }
}

/// `exp(2πi k / d)`
pub fn root_of_unity(k: i64, d: usize) -> Complex64 {
    let k = k.rem_euclid(d as i64);
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64)
}

/// `V_mn = Σ_k ω^{kn} |k⟩⟨k+m mod d|`, with `ω = e^{2πi/d}`.
pub fn weyl_operator(idx: WeylIndex) -> ComplexMatrix {
    let d = idx.d;
    let mut v = ComplexMatrix::zeros(d);
    for k in 0..d {
        v[(k, (k + idx.m) % d)] = root_of_unity((k * idx.n) as i64, d);
    }
    v
}

/// All `V_i` in flat order `i = m·d + n`.
pub fn weyl_operators(d: usize) -> Result<Vec<ComplexMatrix>> {
    check_dim(d)?;
    Ok(WeylIndex::all(d).map(weyl_operator).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_element() {
        assert_eq!(weyl_operator(WeylIndex::new(2, 0, 0).unwrap()), ComplexMatrix::identity(2));
    }

    #[test]
    fn bit_flip() {
        let x = weyl_operator(WeylIndex::new(2, 1, 0).unwrap());
        assert!(x.max_abs_diff(&ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0])) < 1e-15);
    }

    #[test]
    fn phase_flip() {
        let z = weyl_operator(WeylIndex::new(2, 0, 1).unwrap());
        assert!(z.max_abs_diff(&ComplexMatrix::diag(&[1.0, -1.0])) < 1e-15);
    }

    #[test]
    fn orthogonality_d3_exhaustive() {
        // brute-force Hilbert–Schmidt inner products over all 81 pairs
        let ops = weyl_operators(3).unwrap();
        for (i, a) in ops.iter().enumerate() {
            for (j, b) in ops.iter().enumerate() {
                let mut ip = Complex64::new(0.0, 0.0);
                for r in 0..3 {
                    for c in 0..3 {
                        ip += a[(r, c)] * b[(r, c)].conj();
                    }
                }
                let expected = if i == j { 3.0 } else { 0.0 };
                assert!((ip - expected).norm() < 1e-12, "pair ({i},{j}) gave {ip}");
            }
        }
    }

    #[test]
    fn trace_and_unitarity() {
        for d in 2..=5 {
            for idx in WeylIndex::all(d) {
                let v = weyl_operator(idx);
                assert!(v.is_unitary(1e-10));
                let expected = if idx.is_identity() { d as f64 } else { 0.0 };
                assert!((v.trace() - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn commutation_phase() {
        for d in 2..=4 {
            for a in WeylIndex::all(d) {
                for b in WeylIndex::all(d) {
                    let (va, vb) = (weyl_operator(a), weyl_operator(b));
                    let phase = root_of_unity((b.n * a.m) as i64 - (a.n * b.m) as i64, d);
                    let lhs = &va * &vb;
                    let rhs = (&vb * &va).scale(phase);
                    assert!(lhs.max_abs_diff(&rhs) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn index_validation() {
        assert!(WeylIndex::new(2, 2, 0).is_err());
        assert!(WeylIndex::new(1, 0, 0).is_err());
        assert_eq!(WeylIndex::from_flat(3, 5).unwrap(), WeylIndex::new(3, 1, 2).unwrap());
    }
}

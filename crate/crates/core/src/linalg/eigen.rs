//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Each rotation first removes the phase of the pivot `a_pq`, which reduces the
//! 2×2 block to a real symmetric one, then applies the classical Jacobi angle.
//! At the dimensions used here (≤ 64) a handful of sweeps reach machine precision.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::{ComplexMatrix, MAX_DIM};
use crate::error::{Error, Result};

/// Tolerance on `max |M − M†|` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 64;

/// Real eigenvalues sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Eigenvalues and unitary eigenvector matrix (eigenvectors in columns, same order).
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

fn check_input(m: &ComplexMatrix) -> Result<()> {
    if m.dim() == 0 || m.dim() > MAX_DIM {
        return Err(Error::UnsupportedDimension(m.dim()));
    }
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Spectrum> {
    check_input(m)?;
    let mut a = m.hermitian_part();
    jacobi(&mut a, None);
    let mut eigenvalues: Vec<f64> = (0..a.dim()).map(|i| a[(i, i)].re).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { eigenvalues })
}

/// Full eigendecomposition `m = V diag(values) V†`, values descending.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    check_input(m)?;
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    jacobi(&mut a, Some(&mut v));

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for r in 0..n {
        for c in (r + 1)..n {
            s += a[(r, c)].norm_sqr();
        }
    }
    s.sqrt()
}

fn jacobi(a: &mut ComplexMatrix, mut v: Option<&mut ComplexMatrix>) {
    let n = a.dim();
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a) <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                rotate(a, v.as_deref_mut(), p, q, apq, mag);
            }
        }
    }
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
    }
}

/// Applies `A ← J† A J`, `V ← V J` with `J = diag(1, e^{-iφ}) · R(θ)` on the (p, q) plane.
fn rotate(a: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize, apq: Complex64, mag: f64) {
    let n = a.dim();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = 0.5 * (2.0 * mag).atan2(app - aqq);
    let (s, c) = theta.sin_cos();
    let phase = (apq / mag).conj();

    // J entries
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(-s, 0.0);
    let jqp = phase * s;
    let jqq = phase * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[(k, p)];
            let vkq = v[(k, q)];
            v[(k, p)] = vkp * jpp + vkq * jqp;
            v[(k, q)] = vkp * jpq + vkq * jqq;
        }
    }
}

/// Applies a real function to the spectrum of a Hermitian matrix.
pub fn hermitian_function(m: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(m)?;
    let n = m.dim();
    let fv: Vec<f64> = eig.values.iter().map(|&x| f(x)).collect();
    Ok(ComplexMatrix::from_fn(n, |r, c| {
        (0..n)
            .map(|k| eig.vectors[(r, k)] * eig.vectors[(c, k)].conj() * fv[k])
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let s = hermitian_eigenvalues(&ComplexMatrix::diag(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(s.eigenvalues, vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn pauli_x() {
        let x = ComplexMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0]);
        let s = hermitian_eigenvalues(&x).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((s.eigenvalues[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_y_has_complex_vectors() {
        let y = ComplexMatrix::from_vec(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let e = hermitian_eigen(&y).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        let recon = hermitian_function(&y, |x| x).unwrap();
        assert!(recon.max_abs_diff(&y) < 1e-13);
        assert!(e.vectors.is_unitary(1e-13));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn rejects_oversized() {
        let m = ComplexMatrix::identity(MAX_DIM + 1);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::UnsupportedDimension(_))));
    }
}

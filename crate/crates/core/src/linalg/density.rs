use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eigen::{hermitian_eigenvalues, Spectrum, HERMITIAN_TOL};
use super::matrix::{ComplexMatrix, MAX_DIM};
use crate::error::{Error, Result};

/// Smallest eigenvalue accepted as numerically positive semidefinite.
pub const PSD_TOL: f64 = 1e-9;
/// Allowed deviation of the trace from one.
pub const TRACE_TOL: f64 = 1e-10;

/// Side of a bipartite system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

impl TryFrom<usize> for Subsystem {
    type Error = Error;

    fn try_from(i: usize) -> Result<Self> {
        match i {
            0 => Ok(Subsystem::A),
            1 => Ok(Subsystem::B),
            _ => Err(Error::InvalidSubsystem(i)),
        }
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix with subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validates `mat` against the density-matrix invariants.
    pub fn new(mat: ComplexMatrix, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || total != mat.dim() {
            return Err(Error::DimensionMismatch {
                expected: mat.dim(),
                actual: total,
            });
        }
        if total > MAX_DIM {
            return Err(Error::UnsupportedDimension(total));
        }
        let deviation = mat.hermitian_deviation();
        if deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = mat.trace().re;
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotOne { trace });
        }
        let spectrum = hermitian_eigenvalues(&mat)?;
        if spectrum.min() < -PSD_TOL {
            return Err(Error::NotPositive {
                min_eigenvalue: spectrum.min(),
            });
        }
        Ok(Self {
            mat: mat.hermitian_part(),
            dims,
        })
    }

    /// Single-system state.
    pub fn single(mat: ComplexMatrix) -> Result<Self> {
        let d = mat.dim();
        Self::new(mat, vec![d])
    }

    /// Skips the eigenvalue check; used for outputs of maps known to preserve positivity.
    pub(crate) fn from_trusted(mat: ComplexMatrix, dims: Vec<usize>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), mat.dim());
        debug_assert!(mat.hermitian_deviation() < 1e-8);
        Self {
            mat: mat.hermitian_part(),
            dims,
        }
    }

    /// Normalizes an arbitrary positive matrix `m` to unit trace.
    pub(crate) fn from_positive(m: ComplexMatrix, dims: Vec<usize>) -> Self {
        let t = m.trace().re;
        Self::from_trusted(m.scale_real(1.0 / t), dims)
    }

    pub fn pure(amplitudes: &[Complex64], dims: Vec<usize>) -> Result<Self> {
        Self::new(ComplexMatrix::outer(amplitudes), dims)
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let n: usize = dims.iter().product();
        Self::from_trusted(ComplexMatrix::identity(n).scale_real(1.0 / n as f64), dims)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    /// `(dim_a, dim_b)` of a bipartite state.
    pub fn bipartite_dims(&self) -> Result<(usize, usize)> {
        match self.dims.as_slice() {
            &[a, b] => Ok((a, b)),
            other => Err(Error::NotBipartite(other.len())),
        }
    }

    pub fn spectrum(&self) -> Spectrum {
        hermitian_eigenvalues(&self.mat).expect("density matrix is Hermitian")
    }

    /// `ρ_a ⊗ ρ_b`, concatenating subsystem dimensions.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        Self::from_trusted(self.mat.kron(&other.mat), dims)
    }

    /// `U ρ U†` for a unitary `U` on the full space.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Self {
        Self::from_trusted(self.mat.conjugate_by(u), self.dims.clone())
    }

    /// Convex mixture `Σ w_k ρ_k`; weights are assumed to be a probability vector.
    pub fn mixture(weights: &[f64], states: &[DensityMatrix]) -> Result<Self> {
        let first = states.first().ok_or_else(|| Error::InvalidArgument("empty mixture".into()))?;
        let mut acc = ComplexMatrix::zeros(first.dim());
        for (&w, s) in weights.iter().zip(states) {
            if s.dims != first.dims {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    actual: s.dim(),
                });
            }
            acc.add_scaled(w, &s.mat);
        }
        Ok(Self::from_trusted(acc, first.dims.clone()))
    }
}

/// Reduced state of a bipartite density matrix on the `keep` side.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    let (da, db) = rho.bipartite_dims()?;
    let m = rho.matrix();
    let out = match keep {
        Subsystem::B => ComplexMatrix::from_fn(db, |r, c| (0..da).map(|k| m[(k * db + r, k * db + c)]).sum()),
        Subsystem::A => ComplexMatrix::from_fn(da, |r, c| (0..db).map(|k| m[(r * db + k, c * db + k)]).sum()),
    };
    let d = out.dim();
    Ok(DensityMatrix::from_trusted(out, vec![d]))
}

/// Index-based variant of [`partial_trace`]: 0 keeps A, 1 keeps B.
pub fn partial_trace_index(rho: &DensityMatrix, keep: usize) -> Result<DensityMatrix> {
    partial_trace(rho, Subsystem::try_from(keep)?)
}

/// Operator `K ⊗ I` (side A) or `I ⊗ K` (side B).
pub fn embed(op: &ComplexMatrix, side: Subsystem, other_dim: usize) -> ComplexMatrix {
    let id = ComplexMatrix::identity(other_dim);
    match side {
        Subsystem::A => op.kron(&id),
        Subsystem::B => id.kron(op),
    }
}

use num_complex::Complex64;

use super::weyl::check_dim;
use crate::error::Result;
use crate::linalg::{partial_trace, ComplexMatrix, DensityMatrix, Subsystem};

/// Generalized Gell-Mann matrices: `d² − 1` Hermitian traceless generators with
/// `tr(λ_i λ_j) = 2δ_ij`. Ordered symmetric, antisymmetric, then diagonal; for
/// `d = 2` this is `(X, Y, Z)`.
pub fn su_generators(d: usize) -> Result<Vec<ComplexMatrix>> {
    check_dim(d)?;
    let mut out = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in (j + 1)..d {
            let mut sym = ComplexMatrix::zeros(d);
            sym[(j, k)] = Complex64::new(1.0, 0.0);
            sym[(k, j)] = Complex64::new(1.0, 0.0);
            out.push(sym);

            let mut anti = ComplexMatrix::zeros(d);
            anti[(j, k)] = Complex64::new(0.0, -1.0);
            anti[(k, j)] = Complex64::new(0.0, 1.0);
            out.push(anti);
        }
    }
    for l in 1..d {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut diag = vec![0.0; d];
        for x in diag.iter_mut().take(l) {
            *x = norm;
        }
        diag[l] = -(l as f64) * norm;
        out.push(ComplexMatrix::diag(&diag));
    }
    Ok(out)
}

/// Coefficients of `ρ = I ⊗ ρ_b/d + (Σ r_i λ_i ⊗ I + Σ t_ik λ_i ⊗ λ_k) / d²`.
#[derive(Debug, Clone)]
pub struct HilbertSchmidt {
    pub d: usize,
    pub rho_b: ComplexMatrix,
    pub r: Vec<f64>,
    pub t: Vec<Vec<f64>>,
}

impl HilbertSchmidt {
    /// Decomposes a `d ⊗ d` state.
    pub fn decompose(rho: &DensityMatrix) -> Result<Self> {
        let (d, db) = rho.bipartite_dims()?;
        if d != db {
            return Err(crate::Error::DimensionMismatch { expected: d, actual: db });
        }
        let gens = su_generators(d)?;
        let id = ComplexMatrix::identity(d);
        let m = rho.matrix();
        let expect = |op: &ComplexMatrix| (op * m).trace().re;
        let scale_r = d as f64 / 2.0;
        let scale_t = (d * d) as f64 / 4.0;
        let r = gens.iter().map(|g| scale_r * expect(&g.kron(&id))).collect();
        let t = gens
            .iter()
            .map(|gi| gens.iter().map(|gk| scale_t * expect(&gi.kron(gk))).collect())
            .collect();
        let rho_b = partial_trace(rho, Subsystem::B)?.into_matrix();
        Ok(Self { d, rho_b, r, t })
    }

    pub fn reassemble(&self) -> Result<ComplexMatrix> {
        let d = self.d;
        let gens = su_generators(d)?;
        let id = ComplexMatrix::identity(d);
        let mut out = id.kron(&self.rho_b).scale_real(1.0 / d as f64);
        let w = 1.0 / (d * d) as f64;
        for (i, gi) in gens.iter().enumerate() {
            out.add_scaled(w * self.r[i], &gi.kron(&id));
            for (k, gk) in gens.iter().enumerate() {
                out.add_scaled(w * self.t[i][k], &gi.kron(gk));
            }
        }
        Ok(out)
    }
}

//! Entropy functionals, all in bits.

use super::density::{DensityMatrix, PSD_TOL};
use super::eigen::{hermitian_eigen, hermitian_eigenvalues, Spectrum};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Eigenvalues in `[-PSD_TOL, 0)` are treated as zero.
pub fn clip(x: f64) -> f64 {
    if x < 0.0 {
        0.0
    } else {
        x
    }
}

/// `x log₂ x` with `0 log 0 = 0`.
#[inline]
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// `−Σ λ log₂ λ` over a spectrum, after clipping.
pub fn spectrum_entropy(s: &Spectrum) -> f64 {
    let h = -s.eigenvalues.iter().map(|&x| xlog2x(clip(x))).sum::<f64>();
    h.max(0.0)
}

/// Von Neumann entropy `S(ρ) = −tr ρ log₂ ρ`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    let s = rho.spectrum();
    debug_assert!(s.min() >= -PSD_TOL * 10.0, "negative eigenvalue {}", s.min());
    spectrum_entropy(&s)
}

/// Entropy of a raw Hermitian matrix assumed to be a state.
pub(crate) fn matrix_entropy(m: &ComplexMatrix) -> f64 {
    spectrum_entropy(&hermitian_eigenvalues(m).expect("state matrix is Hermitian"))
}

/// Shannon entropy `−Σ p log₂ p`.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if let Some(&bad) = p.iter().find(|&&x| x < -PSD_TOL || !x.is_finite()) {
        return Err(Error::InvalidProbabilities(format!("entry {bad} is negative")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-6 {
        return Err(Error::InvalidProbabilities(format!("entries sum to {sum}")));
    }
    Ok((-p.iter().map(|&x| xlog2x(clip(x))).sum::<f64>()).max(0.0))
}

/// `tr(σ log₂ ρ)`, evaluated in the eigenbasis of `ρ`.
///
/// Fails with [`Error::InfiniteRelativeEntropy`] when `σ` has weight on the kernel of `ρ`.
pub fn trace_sigma_log_rho(sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<f64> {
    if sigma.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            actual: sigma.dim(),
        });
    }
    let eig = hermitian_eigen(rho.matrix())?;
    let sm = sigma.matrix();
    let n = rho.dim();
    let mut acc = 0.0;
    for k in 0..n {
        // ⟨v_k|σ|v_k⟩
        let mut w = 0.0;
        for r in 0..n {
            let vr = eig.vectors[(r, k)].conj();
            for c in 0..n {
                w += (vr * sm[(r, c)] * eig.vectors[(c, k)]).re;
            }
        }
        let lambda = eig.values[k];
        if lambda <= PSD_TOL {
            if w > PSD_TOL {
                return Err(Error::InfiniteRelativeEntropy);
            }
            continue;
        }
        acc += w * lambda.log2();
    }
    Ok(acc)
}

/// Relative entropy `S(σ‖ρ) = tr σ log₂ σ − tr σ log₂ ρ`.
pub fn relative_entropy(sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<f64> {
    let cross = trace_sigma_log_rho(sigma, rho)?;
    Ok(-von_neumann_entropy(sigma) - cross)
}

use serde::{Deserialize, Serialize};

use super::encoding::EncodingScheme;
use crate::channels::BipartiteChannel;
use crate::error::{Error, Result};
use crate::linalg::{embed, partial_trace, von_neumann_entropy, DensityMatrix, Subsystem};
use crate::qops::{random_unitary_with, seeded_rng, weyl_operators};

/// Residual below which the entropy condition counts as satisfied.
pub const CONDITION_TOL: f64 = 1e-6;

/// Haar samples used by [`capacity_unital`].
pub const DEFAULT_CONDITION_SAMPLES: usize = 64;

/// Capacity value with the two entropies it is made of.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapacityResult {
    #[serde(rename = "value_bits")]
    pub value: f64,
    #[serde(rename = "avg_state_entropy_bits")]
    pub average_state_entropy: f64,
    #[serde(rename = "channel_output_entropy_bits")]
    pub channel_output_entropy: f64,
    /// Largest sampled deviation of the encoded output entropy.
    pub condition_residual: f64,
}

/// Sampling parameters of the entropy-condition check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionCheck {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ConditionCheck {
    fn default() -> Self {
        Self {
            samples: DEFAULT_CONDITION_SAMPLES,
            seed: 0,
        }
    }
}

/// Noiseless capacity `log₂ d + S(ρ_b) − S(ρ)` with `d` Alice's dimension.
pub fn capacity_noiseless(rho: &DensityMatrix) -> Result<f64> {
    let (da, db) = rho.bipartite_dims()?;
    if da != db {
        return Err(Error::DimensionMismatch { expected: da, actual: db });
    }
    let rho_b = partial_trace(rho, Subsystem::B)?;
    Ok((da as f64).log2() + von_neumann_entropy(&rho_b) - von_neumann_entropy(rho))
}

fn check_compatible(rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<(usize, usize)> {
    let (da, db) = rho.bipartite_dims()?;
    if da != ch.dim_a() || db != ch.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: ch.dim(),
            actual: rho.dim(),
        });
    }
    if !ch.is_unital() {
        return Err(Error::NotUnital {
            deviation: f64::NAN,
        });
    }
    Ok((da, db))
}

/// Largest deviation `|S(Λ((U⊗1)ρ(U⊗1)†)) − S(Λ(ρ))|` over the Weyl operators
/// and `samples` Haar-random unitaries `U` on Alice's side.
///
/// A residual below [`CONDITION_TOL`] is taken as numerical evidence that the
/// output entropy does not depend on the encoding.
pub fn check_entropy_condition(rho: &DensityMatrix, ch: &BipartiteChannel, samples: usize, seed: u64) -> Result<f64> {
    let (da, db) = check_compatible(rho, ch)?;
    let base = von_neumann_entropy(&ch.apply(rho)?);
    let mut rng = seeded_rng(seed);
    let mut unitaries = weyl_operators(da)?;
    unitaries.extend((0..samples).map(|_| random_unitary_with(da, &mut rng)));
    let mut residual: f64 = 0.0;
    for u in &unitaries {
        let encoded = rho.conjugate_by(&embed(u, Subsystem::A, db));
        let s = von_neumann_entropy(&ch.apply(&encoded)?);
        residual = residual.max((s - base).abs());
    }
    Ok(residual)
}

/// `χ̃ = S(ρ̃) − S(Λ_ab(ρ))` with `ρ̃` the channel output averaged over the
/// equiprobable Weyl encoding. No condition check.
pub fn weyl_capacity_terms(rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<(f64, f64)> {
    check_compatible(rho, ch)?;
    let (da, _) = rho.bipartite_dims()?;
    let ens = EncodingScheme::weyl(da)?.ensemble(rho, ch)?;
    let avg = von_neumann_entropy(&ens.average());
    let out = von_neumann_entropy(&ch.apply(rho)?);
    Ok((avg, out))
}

/// Capacity of `rho` over a unital channel, using the default condition check.
pub fn capacity_unital(rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<CapacityResult> {
    capacity_unital_with(rho, ch, ConditionCheck::default())
}

/// Capacity `S(ρ̃) − S(Λ_ab(ρ))`; fails with [`Error::ConditionViolated`] when the
/// sampled entropy condition does not hold, in which case the same expression is
/// only an achievable lower bound (see [`weyl_capacity_terms`]).
pub fn capacity_unital_with(rho: &DensityMatrix, ch: &BipartiteChannel, check: ConditionCheck) -> Result<CapacityResult> {
    let residual = check_entropy_condition(rho, ch, check.samples, check.seed)?;
    if residual >= CONDITION_TOL {
        return Err(Error::ConditionViolated { residual });
    }
    let (avg, out) = weyl_capacity_terms(rho, ch)?;
    Ok(CapacityResult {
        value: avg - out,
        average_state_entropy: avg,
        channel_output_entropy: out,
        condition_residual: residual,
    })
}

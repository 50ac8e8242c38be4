//! Alice-side pre-processing before the Weyl encoding over Pauli channels.

use serde::{Deserialize, Serialize};

use crate::channels::{lift, BipartiteChannel, KrausChannel};
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, von_neumann_entropy, ComplexMatrix, DensityMatrix, Subsystem};
use crate::qops::{weyl_operator, WeylIndex};

/// A named trace-preserving map applied on Alice's side.
#[derive(Debug, Clone)]
pub struct Preprocessing {
    pub label: String,
    pub map: KrausChannel,
}

impl Preprocessing {
    pub fn new(label: impl Into<String>, map: KrausChannel) -> Self {
        Self {
            label: label.into(),
            map,
        }
    }
}

/// Computational-basis measurement, Kraus `{|k⟩⟨k|}`.
pub fn basis_measurement(d: usize) -> Result<KrausChannel> {
    KrausChannel::new(
        (0..d)
            .map(|k| {
                let mut e = vec![0.0; d];
                e[k] = 1.0;
                ComplexMatrix::diag(&e)
            })
            .collect(),
    )
}

/// Measurement in the computational basis followed by preparation of
/// `V_mn|0⟩`: Kraus `{V_mn |0⟩⟨k|}_k`.
pub fn measure_and_prepare(idx: WeylIndex) -> Result<KrausChannel> {
    let d = idx.d();
    let v = weyl_operator(idx);
    KrausChannel::new(
        (0..d)
            .map(|k| {
                let mut op = ComplexMatrix::zeros(d);
                for r in 0..d {
                    op[(r, k)] = v[(r, 0)];
                }
                op
            })
            .collect(),
    )
}

/// Identity, basis measurement, and measure-and-prepare for every `V_mn`.
pub fn builtin_candidates(d: usize) -> Result<Vec<Preprocessing>> {
    let mut out = vec![
        Preprocessing::new("identity", KrausChannel::identity(d)),
        Preprocessing::new("measure", basis_measurement(d)?),
    ];
    for idx in WeylIndex::all(d) {
        out.push(Preprocessing::new(
            format!("measure-prepare({},{})", idx.m(), idx.n()),
            measure_and_prepare(idx)?,
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PreprocessingResult {
    #[serde(rename = "value_bits")]
    pub value: f64,
    pub chosen: usize,
    pub label: String,
    /// `S(Λ_ab(Γ(ρ)))` for the chosen map.
    #[serde(rename = "channel_output_entropy_bits")]
    pub output_entropy: f64,
}

/// `log₂ d + S(Λ_b(ρ_b)) − min_Γ S(Λ_ab((Γ ⊗ 1)(ρ)))` over `candidates`.
///
/// The bound is attained by applying the chosen map and then the equiprobable
/// Weyl encoding. Ties go to the earliest candidate.
pub fn preprocessing_capacity(
    rho: &DensityMatrix,
    ch: &BipartiteChannel,
    candidates: &[Preprocessing],
) -> Result<PreprocessingResult> {
    if !ch.is_pauli() {
        return Err(Error::NotPauli);
    }
    let (da, db) = rho.bipartite_dims()?;
    if da != ch.dim_a() || db != ch.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: ch.dim(),
            actual: rho.dim(),
        });
    }
    if let Some(c) = candidates.iter().find(|c| c.map.local_dim() != da) {
        return Err(Error::DimensionMismatch {
            expected: da,
            actual: c.map.local_dim(),
        });
    }
    if !candidates.iter().any(|c| c.map.is_identity_map()) {
        return Err(Error::MissingIdentityCandidate);
    }

    let rho_b = partial_trace(rho, Subsystem::B)?;
    let bob = von_neumann_entropy(&ch.reduced_b(&rho_b)?);

    let mut best: Option<(usize, f64)> = None;
    for (i, c) in candidates.iter().enumerate() {
        let prepared = lift(&c.map, Subsystem::A, db).apply(rho)?;
        let s = von_neumann_entropy(&ch.apply(&prepared)?);
        if best.is_none_or(|(_, b)| s < b - 1e-12) {
            best = Some((i, s));
        }
    }
    let (chosen, output_entropy) = best.expect("candidate set is non-empty");
    Ok(PreprocessingResult {
        value: (da as f64).log2() + bob - output_entropy,
        chosen,
        label: candidates[chosen].label.clone(),
        output_entropy,
    })
}

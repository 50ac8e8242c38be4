use serde::{Deserialize, Serialize};

use super::holevo::{holevo, Ensemble};
use crate::channels::{lift, BipartiteChannel, KrausChannel};
use crate::error::{Error, Result};
use crate::linalg::{embed, ComplexMatrix, DensityMatrix, Subsystem};
use crate::qops::weyl_operators;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EncodingKind {
    /// The `d²` Weyl operators with equal weights.
    UnitaryWeyl,
    UnitaryCustom,
    /// A fixed Alice-side map followed by the Weyl encoding.
    Preprocessed,
}

/// Alice's encoding: local unitaries `W_i` with probabilities `p_i`, optionally
/// preceded by a fixed pre-processing map.
#[derive(Debug, Clone)]
pub struct EncodingScheme {
    pub kind: EncodingKind,
    pub unitaries: Vec<ComplexMatrix>,
    pub probabilities: Vec<f64>,
    pub pre_map: Option<KrausChannel>,
}

impl EncodingScheme {
    pub fn weyl(d: usize) -> Result<Self> {
        let unitaries = weyl_operators(d)?;
        let n = unitaries.len();
        Ok(Self {
            kind: EncodingKind::UnitaryWeyl,
            unitaries,
            probabilities: vec![1.0 / n as f64; n],
            pre_map: None,
        })
    }

    pub fn custom(unitaries: Vec<ComplexMatrix>, probabilities: Vec<f64>) -> Result<Self> {
        if unitaries.len() != probabilities.len() || unitaries.is_empty() {
            return Err(Error::InvalidArgument("one probability per unitary required".into()));
        }
        let total: f64 = probabilities.iter().sum();
        if probabilities.iter().any(|p| p.is_nan() || *p < 0.0) || (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidProbabilities(format!("weights {probabilities:?}")));
        }
        if let Some(u) = unitaries.iter().find(|u| !u.is_unitary(1e-9)) {
            return Err(Error::InvalidArgument(format!(
                "encoding operator is not unitary (deviation {:e})",
                u.unitary_deviation()
            )));
        }
        Ok(Self {
            kind: EncodingKind::UnitaryCustom,
            unitaries,
            probabilities,
            pre_map: None,
        })
    }

    pub fn preprocessed(pre_map: KrausChannel) -> Result<Self> {
        let mut s = Self::weyl(pre_map.local_dim())?;
        s.kind = EncodingKind::Preprocessed;
        s.pre_map = Some(pre_map);
        Ok(s)
    }

    /// Received ensemble `{p_i, Λ_ab((W_i ⊗ 1) Γ(ρ) (W_i ⊗ 1)†)}`.
    pub fn ensemble(&self, rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<Ensemble> {
        let (da, db) = rho.bipartite_dims()?;
        let start = match &self.pre_map {
            Some(g) => lift(g, Subsystem::A, db).apply(rho)?,
            None => rho.clone(),
        };
        let members = self
            .unitaries
            .iter()
            .zip(&self.probabilities)
            .map(|(u, &p)| {
                if u.dim() != da {
                    return Err(Error::DimensionMismatch {
                        expected: da,
                        actual: u.dim(),
                    });
                }
                let encoded = start.conjugate_by(&embed(u, Subsystem::A, db));
                Ok((p, ch.apply(&encoded)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ensemble::new(members)
    }

    pub fn holevo(&self, rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<f64> {
        Ok(holevo(&self.ensemble(rho, ch)?))
    }
}

use rand::Rng;

use super::pauli::{PauliSpec, PauliTable};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};
use crate::qops::{random_unitary_with, weyl_operator, WeylIndex};

/// Tolerance for `Σ K†K = I` and `Σ KK† = I`.
pub const CHANNEL_TOL: f64 = 1e-9;

/// Completely positive trace-preserving map on one `local_dim`-level system.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    local_dim: usize,
    kraus_ops: Vec<ComplexMatrix>,
    unital: bool,
    pauli: Option<PauliSpec>,
}

pub(crate) fn completeness_deviation(ops: &[ComplexMatrix], dim: usize, adjoint_first: bool) -> f64 {
    let mut acc = ComplexMatrix::zeros(dim);
    for k in ops {
        let term = if adjoint_first { &k.adjoint() * k } else { k * &k.adjoint() };
        acc = &acc + &term;
    }
    acc.max_abs_diff(&ComplexMatrix::identity(dim))
}

impl KrausChannel {
    /// Validates trace preservation and records whether the map is unital.
    pub fn new(kraus_ops: Vec<ComplexMatrix>) -> Result<Self> {
        let local_dim = kraus_ops
            .first()
            .map(ComplexMatrix::dim)
            .ok_or_else(|| Error::InvalidArgument("channel needs at least one Kraus operator".into()))?;
        if let Some(k) = kraus_ops.iter().find(|k| k.dim() != local_dim) {
            return Err(Error::DimensionMismatch {
                expected: local_dim,
                actual: k.dim(),
            });
        }
        let deviation = completeness_deviation(&kraus_ops, local_dim, true);
        if deviation > CHANNEL_TOL {
            return Err(Error::NotTracePreserving { deviation });
        }
        let unital = completeness_deviation(&kraus_ops, local_dim, false) <= CHANNEL_TOL;
        Ok(Self {
            local_dim,
            kraus_ops,
            unital,
            pauli: None,
        })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            local_dim: d,
            kraus_ops: vec![ComplexMatrix::identity(d)],
            unital: true,
            pauli: None,
        }
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.kraus_ops
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// Probability table when the channel was built as a Pauli channel.
    pub fn pauli_spec(&self) -> Option<&PauliSpec> {
        self.pauli.as_ref()
    }

    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(m.dim());
        for k in &self.kraus_ops {
            out = &out + &m.conjugate_by(k);
        }
        out
    }

    /// `Λ(ρ) = Σ K ρ K†`.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.local_dim {
            return Err(Error::DimensionMismatch {
                expected: self.local_dim,
                actual: rho.dim(),
            });
        }
        Ok(DensityMatrix::from_trusted(self.apply_matrix(rho.matrix()), rho.dims().to_vec()))
    }

    /// True when the map acts as the identity (checked on its Choi state).
    pub fn is_identity_map(&self) -> bool {
        let d = self.local_dim;
        // Λ(|j⟩⟨k|) must equal |j⟩⟨k| for every matrix unit
        for j in 0..d {
            for k in 0..d {
                let mut e = ComplexMatrix::zeros(d);
                e[(j, k)] = crate::linalg::ONE;
                if self.apply_matrix(&e).max_abs_diff(&e) > CHANNEL_TOL {
                    return false;
                }
            }
        }
        true
    }
}

/// One-sided Pauli channel with Kraus operators `√q_mn V_mn`.
pub fn pauli_channel(spec: &PauliSpec) -> Result<KrausChannel> {
    let q = match spec.table() {
        PauliTable::OneSided(q) => q,
        PauliTable::Joint(_) => {
            return Err(Error::InvalidArgument("one-sided Pauli channel needs a one-sided table".into()))
        }
    };
    let d = spec.d();
    let kraus_ops = WeylIndex::all(d)
        .zip(q)
        .filter(|(_, &w)| w > 0.0)
        .map(|(idx, &w)| weyl_operator(idx).scale_real(w.sqrt()))
        .collect();
    Ok(KrausChannel {
        local_dim: d,
        kraus_ops,
        unital: true,
        pauli: Some(spec.clone()),
    })
}

/// Random-unitary channel `Σ w_k U_k ρ U_k†` with Haar unitaries and uniform-simplex weights.
pub fn random_unitary_mixture<R: Rng + ?Sized>(d: usize, terms: usize, rng: &mut R) -> KrausChannel {
    let raw: Vec<f64> = (0..terms).map(|_| -rng.random::<f64>().max(1e-300).ln()).collect();
    let total: f64 = raw.iter().sum();
    let kraus_ops = raw
        .iter()
        .map(|&w| random_unitary_with(d, rng).scale_real((w / total).sqrt()))
        .collect();
    KrausChannel {
        local_dim: d,
        kraus_ops,
        unital: true,
        pauli: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::depolarizing_spec;
    use crate::linalg::{hermitian_eigenvalues, von_neumann_entropy};
    use crate::qops::{seeded_rng, random_density};

    #[test]
    fn identity_channel() {
        let mut rng = seeded_rng(3);
        let rho = random_density(&[3], &mut rng);
        let out = KrausChannel::identity(3).apply(&rho).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-15);
        assert!(KrausChannel::identity(3).is_identity_map());
    }

    #[test]
    fn delta_table_is_identity() {
        let spec = PauliSpec::one_sided(2, vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert!(pauli_channel(&spec).unwrap().is_identity_map());
    }

    #[test]
    fn uniform_table_twirls() {
        let spec = PauliSpec::one_sided(2, vec![0.25; 4]).unwrap();
        let ch = pauli_channel(&spec).unwrap();
        let mut rng = seeded_rng(9);
        for _ in 0..5 {
            let out = ch.apply(&random_density(&[2], &mut rng)).unwrap();
            assert!(out.matrix().max_abs_diff(&ComplexMatrix::identity(2).scale_real(0.5)) < 1e-14);
        }
    }

    #[test]
    fn depolarizing_qubit_contracts_bloch_vector() {
        let ch = pauli_channel(&depolarizing_spec(2, 0.4).unwrap()).unwrap();
        let out = ch.apply(&DensityMatrix::single(ComplexMatrix::diag(&[1.0, 0.0])).unwrap()).unwrap();
        let s = hermitian_eigenvalues(out.matrix()).unwrap();
        assert!((s.eigenvalues[0] - 0.8).abs() < 1e-14);
        assert!(ch.is_unital());
    }

    #[test]
    fn rejects_non_trace_preserving() {
        let k = ComplexMatrix::diag(&[1.0, 0.5]);
        assert!(matches!(KrausChannel::new(vec![k]), Err(Error::NotTracePreserving { .. })));
    }

    #[test]
    fn detects_non_unital() {
        // amplitude-damping-like reset to |0⟩
        let mut k0 = ComplexMatrix::zeros(2);
        k0[(0, 0)] = crate::linalg::ONE;
        let mut k1 = ComplexMatrix::zeros(2);
        k1[(0, 1)] = crate::linalg::ONE;
        let ch = KrausChannel::new(vec![k0, k1]).unwrap();
        assert!(!ch.is_unital());
        let out = ch.apply(&DensityMatrix::maximally_mixed(vec![2])).unwrap();
        assert!(von_neumann_entropy(&out).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let ch = KrausChannel::identity(2);
        assert!(matches!(
            ch.apply(&DensityMatrix::maximally_mixed(vec![3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn random_mixture_is_unital() {
        let mut rng = seeded_rng(11);
        let ch = random_unitary_mixture(3, 4, &mut rng);
        assert!(completeness_deviation(ch.kraus_ops(), 3, true) < 1e-12);
        assert!(completeness_deviation(ch.kraus_ops(), 3, false) < 1e-12);
    }
}

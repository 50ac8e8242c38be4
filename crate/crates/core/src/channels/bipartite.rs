use serde::{Deserialize, Serialize};

use super::kraus::{completeness_deviation, pauli_channel, KrausChannel, CHANNEL_TOL};
use super::pauli::{depolarizing_spec, PauliSpec, PauliTable};
use crate::error::{Error, Result};
use crate::linalg::{embed, partial_trace, ComplexMatrix, DensityMatrix, Subsystem};
use crate::qops::{random_density, random_unitary_with, seeded_rng, weyl_operator, WeylIndex};

/// Common interface of single-system and bipartite channels.
pub trait Channel {
    fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix>;
}

impl Channel for KrausChannel {
    fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        KrausChannel::apply(self, rho)
    }
}

impl Channel for BipartiteChannel {
    fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        BipartiteChannel::apply(self, rho)
    }
}

/// Applies any channel to a state.
pub fn apply<C: Channel + ?Sized>(ch: &C, rho: &DensityMatrix) -> Result<DensityMatrix> {
    ch.apply(rho)
}

/// Channel on a `dim_a ⊗ dim_b` system stored as joint Kraus operators.
///
/// Pauli channels also keep their joint probability table `q_{mn m̃ñ}`, even when
/// it factorizes.
#[derive(Debug, Clone)]
pub struct BipartiteChannel {
    dim_a: usize,
    dim_b: usize,
    kraus: Vec<ComplexMatrix>,
    unital: bool,
    pauli: Option<PauliSpec>,
}

impl BipartiteChannel {
    /// Validates joint Kraus operators on `dim_a · dim_b`.
    pub fn new(dim_a: usize, dim_b: usize, kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let n = dim_a * dim_b;
        if let Some(k) = kraus.iter().find(|k| k.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: k.dim(),
            });
        }
        if kraus.is_empty() {
            return Err(Error::InvalidArgument("channel needs at least one Kraus operator".into()));
        }
        let deviation = completeness_deviation(&kraus, n, true);
        if deviation > CHANNEL_TOL {
            return Err(Error::NotTracePreserving { deviation });
        }
        let unital = completeness_deviation(&kraus, n, false) <= CHANNEL_TOL;
        Ok(Self {
            dim_a,
            dim_b,
            kraus,
            unital,
            pauli: None,
        })
    }

    pub fn identity(dim_a: usize, dim_b: usize) -> Self {
        Self {
            dim_a,
            dim_b,
            kraus: vec![ComplexMatrix::identity(dim_a * dim_b)],
            unital: true,
            pauli: None,
        }
    }

    /// `Λ_ab(ρ) = Σ (A_m ⊗ B_m̃) ρ (A_m ⊗ B_m̃)†`.
    pub fn product(a: &KrausChannel, b: &KrausChannel) -> Self {
        let kraus = a
            .kraus_ops()
            .iter()
            .flat_map(|ka| b.kraus_ops().iter().map(move |kb| ka.kron(kb)))
            .collect();
        let pauli = match (a.pauli_spec(), b.pauli_spec()) {
            (Some(pa), Some(pb)) => PauliSpec::product(pa, pb).ok(),
            _ => None,
        };
        Self {
            dim_a: a.local_dim(),
            dim_b: b.local_dim(),
            kraus,
            unital: a.is_unital() && b.is_unital(),
            pauli,
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim(&self) -> usize {
        self.dim_a * self.dim_b
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    /// Joint probability table when this is a two-sided Pauli channel.
    pub fn pauli_spec(&self) -> Option<&PauliSpec> {
        self.pauli.as_ref()
    }

    pub fn is_pauli(&self) -> bool {
        self.pauli.is_some()
    }

    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(m.dim());
        for k in &self.kraus {
            out = &out + &m.conjugate_by(k);
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let (da, db) = rho.bipartite_dims()?;
        if da != self.dim_a || db != self.dim_b {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: rho.dim(),
            });
        }
        Ok(DensityMatrix::from_trusted(self.apply_matrix(rho.matrix()), vec![da, db]))
    }

    /// Local action on Bob's side, `Λ_b(σ) = tr_a Λ_ab(1/d_a ⊗ σ)`.
    pub fn reduced_b(&self, sigma_b: &DensityMatrix) -> Result<DensityMatrix> {
        let left = DensityMatrix::maximally_mixed(vec![self.dim_a]);
        partial_trace(&self.apply(&left.tensor(sigma_b))?, Subsystem::B)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &BipartiteChannel) -> Result<Self> {
        if next.dim_a != self.dim_a || next.dim_b != self.dim_b {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: next.dim(),
            });
        }
        if let (Some(p), Some(q)) = (&self.pauli, &next.pauli) {
            return joint_pauli(&p.compose_joint(q));
        }
        let kraus = next
            .kraus
            .iter()
            .flat_map(|k2| self.kraus.iter().map(move |k1| k2 * k1))
            .collect();
        Ok(Self {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            kraus,
            unital: self.unital && next.unital,
            pauli: None,
        })
    }
}

/// Places a local channel on side A or B with the identity on the other side.
pub fn lift(ch: &KrausChannel, side: Subsystem, other_dim: usize) -> BipartiteChannel {
    let kraus = ch.kraus_ops().iter().map(|k| embed(k, side, other_dim)).collect();
    let pauli = ch
        .pauli_spec()
        .filter(|s| s.d() == other_dim)
        .map(|s| s.embed_joint(side == Subsystem::A));
    let (dim_a, dim_b) = match side {
        Subsystem::A => (ch.local_dim(), other_dim),
        Subsystem::B => (other_dim, ch.local_dim()),
    };
    BipartiteChannel {
        dim_a,
        dim_b,
        kraus,
        unital: ch.is_unital(),
        pauli,
    }
}

fn joint_pauli(spec: &PauliSpec) -> Result<BipartiteChannel> {
    let d = spec.d();
    let q = match spec.table() {
        PauliTable::Joint(q) => q,
        PauliTable::OneSided(_) => unreachable!("joint table expected"),
    };
    let ops: Vec<ComplexMatrix> = WeylIndex::all(d).map(weyl_operator).collect();
    let d2 = d * d;
    let kraus = q
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(k, &w)| ops[k / d2].kron(&ops[k % d2]).scale_real(w.sqrt()))
        .collect();
    Ok(BipartiteChannel {
        dim_a: d,
        dim_b: d,
        kraus,
        unital: true,
        pauli: Some(spec.clone()),
    })
}

/// Two-sided Pauli channel `Σ q_{mn m̃ñ} (V_mn ⊗ V_m̃ñ) ρ (·)†`.
///
/// A one-sided table is applied independently on both sides (`q_mn q_m̃ñ`).
pub fn two_sided_pauli(spec: &PauliSpec) -> Result<BipartiteChannel> {
    if spec.is_joint() {
        joint_pauli(spec)
    } else {
        joint_pauli(&PauliSpec::product(spec, spec)?)
    }
}

/// Depolarizing noise on Alice's side only.
pub fn one_sided_depolarizing(d: usize, p: f64) -> Result<BipartiteChannel> {
    Ok(lift(&pauli_channel(&depolarizing_spec(d, p)?)?, Subsystem::A, d))
}

/// Depolarizing noise with the same parameter on both sides.
pub fn two_sided_depolarizing(d: usize, p: f64) -> Result<BipartiteChannel> {
    two_sided_pauli(&depolarizing_spec(d, p)?)
}

/// One-sided Pauli channel on Alice's side as a bipartite channel.
pub fn one_sided_pauli(spec: &PauliSpec) -> Result<BipartiteChannel> {
    Ok(lift(&pauli_channel(spec)?, Subsystem::A, spec.d()))
}

/// Outcome of a sampled covariance test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CovarianceReport {
    pub trials: usize,
    pub max_difference: f64,
    pub passed: bool,
}

/// Checks `Λ((U_a⊗U_b) ρ (·)†) = (U_a⊗U_b) Λ(ρ) (·)†` on Haar-random local unitaries
/// and random states; passes when every max-norm difference is below `1e-9`.
pub fn verify_covariance(ch: &BipartiteChannel, trials: usize, seed: u64) -> CovarianceReport {
    let mut rng = seeded_rng(seed);
    let mut max_difference: f64 = 0.0;
    for _ in 0..trials {
        let ua = random_unitary_with(ch.dim_a, &mut rng);
        let ub = random_unitary_with(ch.dim_b, &mut rng);
        let u = ua.kron(&ub);
        let rho = random_density(&[ch.dim_a, ch.dim_b], &mut rng);
        let lhs = ch.apply_matrix(&rho.matrix().conjugate_by(&u));
        let rhs = ch.apply_matrix(rho.matrix()).conjugate_by(&u);
        max_difference = max_difference.max(lhs.max_abs_diff(&rhs));
    }
    CovarianceReport {
        trials,
        max_difference,
        passed: max_difference < 1e-9,
    }
}

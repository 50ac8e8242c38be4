use crate::error::{Error, Result};
use crate::linalg::{relative_entropy, von_neumann_entropy, DensityMatrix};

/// Weighted collection of states with common dimensions.
#[derive(Debug, Clone)]
pub struct Ensemble {
    members: Vec<(f64, DensityMatrix)>,
}

impl Ensemble {
    pub fn new(members: Vec<(f64, DensityMatrix)>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::InvalidArgument("ensemble must not be empty".into()))?;
        if let Some((_, s)) = members.iter().find(|(_, s)| s.dims() != first.1.dims()) {
            return Err(Error::DimensionMismatch {
                expected: first.1.dim(),
                actual: s.dim(),
            });
        }
        if let Some((p, _)) = members.iter().find(|(p, _)| p.is_nan() || *p < 0.0) {
            return Err(Error::InvalidProbabilities(format!("weight {p} is negative")));
        }
        let total: f64 = members.iter().map(|(p, _)| p).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidProbabilities(format!("weights sum to {total}")));
        }
        Ok(Self { members })
    }

    pub fn uniform(states: Vec<DensityMatrix>) -> Result<Self> {
        let w = 1.0 / states.len().max(1) as f64;
        Self::new(states.into_iter().map(|s| (w, s)).collect())
    }

    pub fn members(&self) -> &[(f64, DensityMatrix)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `Σ p_i ρ_i`
    pub fn average(&self) -> DensityMatrix {
        let (w, s): (Vec<f64>, Vec<DensityMatrix>) = self.members.iter().cloned().unzip();
        DensityMatrix::mixture(&w, &s).expect("validated ensemble")
    }
}

/// `χ = S(Σ p_i ρ_i) − Σ p_i S(ρ_i)`, in bits.
pub fn holevo(ens: &Ensemble) -> f64 {
    let avg = von_neumann_entropy(&ens.average());
    let mean: f64 = ens.members.iter().map(|(p, s)| p * von_neumann_entropy(s)).sum();
    avg - mean
}

/// Second form of the Holevo quantity, `Σ p_i S(ρ_i ‖ ρ̄)`.
pub fn holevo_relative(ens: &Ensemble) -> Result<f64> {
    let avg = ens.average();
    ens.members
        .iter()
        .filter(|(p, _)| *p > 0.0)
        .map(|(p, s)| relative_entropy(s, &avg).map(|r| p * r))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qops::{basis_product, bell_state, random_density, seeded_rng, WeylIndex};

    #[test]
    fn single_member_is_zero() {
        let mut rng = seeded_rng(2);
        let e = Ensemble::new(vec![(1.0, random_density(&[2, 2], &mut rng))]).unwrap();
        assert!(holevo(&e).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_pure_states() {
        let states = (0..4).map(|k| basis_product(2, k / 2, k % 2).unwrap().density()).collect();
        let e = Ensemble::uniform(states).unwrap();
        assert!((holevo(&e) - 2.0).abs() < 1e-12);
        let bells = WeylIndex::all(2).map(|i| bell_state(2, i).unwrap().density()).collect();
        assert!((holevo(&Ensemble::uniform(bells).unwrap()) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn two_forms_agree() {
        let mut rng = seeded_rng(17);
        let members = vec![
            (0.2, random_density(&[2, 2], &mut rng)),
            (0.5, random_density(&[2, 2], &mut rng)),
            (0.3, random_density(&[2, 2], &mut rng)),
        ];
        let e = Ensemble::new(members).unwrap();
        assert!((holevo(&e) - holevo_relative(&e).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn validation() {
        let r = DensityMatrix::maximally_mixed(vec![2]);
        assert!(Ensemble::new(vec![(0.5, r.clone())]).is_err());
        assert!(Ensemble::new(vec![(1.2, r.clone()), (-0.2, r.clone())]).is_err());
        assert!(Ensemble::new(vec![(0.5, r.clone()), (0.5, DensityMatrix::maximally_mixed(vec![3]))]).is_err());
        assert!(Ensemble::new(vec![]).is_err());
    }
}

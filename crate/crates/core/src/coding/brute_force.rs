//! Random-restart search over unitary encodings, used as a numerical adversary
//! to the capacity formulas.

use rayon::prelude::*;

use super::encoding::EncodingScheme;
use crate::channels::BipartiteChannel;
use crate::error::{Error, Result};
use crate::linalg::{embed, matrix_entropy, ComplexMatrix, DensityMatrix, Subsystem};
use crate::qops::{perturb_unitary, random_unitary_with, seeded_rng};

/// Search parameters. `refine_steps` counts single-unitary perturbations per restart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceConfig {
    pub ensemble_size: usize,
    pub restarts: usize,
    pub seed: u64,
    pub refine_steps: usize,
    pub weight_sweeps: usize,
}

impl BruteForceConfig {
    pub fn new(ensemble_size: usize, restarts: usize, seed: u64) -> Self {
        Self {
            ensemble_size,
            restarts,
            seed,
            refine_steps: 120,
            weight_sweeps: 4,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BruteForceReport {
    pub best_chi: f64,
    pub best_scheme: EncodingScheme,
    /// Restart index that produced the best value.
    pub best_restart: usize,
    /// Best value of every restart, in restart order.
    pub restart_values: Vec<f64>,
}

/// Best Holevo quantity over `ensemble_size` unitary encodings with optimized weights.
pub fn brute_force_best_encoding(
    rho: &DensityMatrix,
    ch: &BipartiteChannel,
    ensemble_size: usize,
    restarts: usize,
    seed: u64,
) -> Result<BruteForceReport> {
    brute_force_with(rho, ch, &BruteForceConfig::new(ensemble_size, restarts, seed))
}

pub fn brute_force_with(rho: &DensityMatrix, ch: &BipartiteChannel, cfg: &BruteForceConfig) -> Result<BruteForceReport> {
    let (da, db) = rho.bipartite_dims()?;
    if da != ch.dim_a() || db != ch.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: ch.dim(),
            actual: rho.dim(),
        });
    }
    if cfg.ensemble_size < da * da {
        return Err(Error::InvalidArgument(format!(
            "ensemble size {} is below d² = {}",
            cfg.ensemble_size,
            da * da
        )));
    }
    if cfg.restarts == 0 {
        return Err(Error::InvalidArgument("at least one restart is required".into()));
    }

    let problem = Problem { rho, ch, da, db };
    let runs: Vec<(f64, Vec<ComplexMatrix>, Vec<f64>)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| problem.restart(cfg, restart_seed(cfg.seed, r)))
        .collect();

    let restart_values: Vec<f64> = runs.iter().map(|r| r.0).collect();
    // first index wins ties, independent of the thread schedule
    let best_restart = (0..runs.len()).fold(0, |best, i| if runs[i].0 > runs[best].0 { i } else { best });
    let (best_chi, us, w) = runs.into_iter().nth(best_restart).expect("at least one restart");
    Ok(BruteForceReport {
        best_chi,
        best_scheme: EncodingScheme::custom(us, w)?,
        best_restart,
        restart_values,
    })
}

fn restart_seed(seed: u64, r: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(r as u64)
}

struct Problem<'a> {
    rho: &'a DensityMatrix,
    ch: &'a BipartiteChannel,
    da: usize,
    db: usize,
}

/// Channel outputs and their entropies for a fixed list of unitaries.
struct Members {
    outputs: Vec<ComplexMatrix>,
    entropies: Vec<f64>,
}

impl Members {
    fn chi(&self, w: &[f64]) -> f64 {
        let mut avg = ComplexMatrix::zeros(self.outputs[0].dim());
        let mut mean = 0.0;
        for ((o, e), &p) in self.outputs.iter().zip(&self.entropies).zip(w) {
            if p > 0.0 {
                avg.add_scaled(p, o);
                mean += p * e;
            }
        }
        matrix_entropy(&avg) - mean
    }
}

impl Problem<'_> {
    fn output(&self, u: &ComplexMatrix) -> ComplexMatrix {
        let full = embed(u, Subsystem::A, self.db);
        self.ch.apply_matrix(&self.rho.matrix().conjugate_by(&full))
    }

    fn restart(&self, cfg: &BruteForceConfig, seed: u64) -> (f64, Vec<ComplexMatrix>, Vec<f64>) {
        let k = cfg.ensemble_size;
        let mut rng = seeded_rng(seed);
        let mut us: Vec<ComplexMatrix> = (0..k).map(|_| random_unitary_with(self.da, &mut rng)).collect();
        let outputs: Vec<ComplexMatrix> = us.iter().map(|u| self.output(u)).collect();
        let entropies = outputs.iter().map(matrix_entropy).collect();
        let mut m = Members { outputs, entropies };
        let mut w = vec![1.0 / k as f64; k];
        let mut chi = optimize_weights(&m, &mut w, cfg.weight_sweeps);

        let mut eps = 0.3;
        let mut misses = 0;
        for step in 0..cfg.refine_steps {
            let i = step % k;
            let cand = perturb_unitary(&us[i], eps, &mut rng);
            let out = self.output(&cand);
            let ent = matrix_entropy(&out);
            let old_out = std::mem::replace(&mut m.outputs[i], out);
            let old_ent = std::mem::replace(&mut m.entropies[i], ent);
            let c = m.chi(&w);
            if c > chi {
                chi = c;
                us[i] = cand;
                misses = 0;
            } else {
                m.outputs[i] = old_out;
                m.entropies[i] = old_ent;
                misses += 1;
                if misses >= k {
                    eps = (eps * 0.6f64).max(1e-3);
                    misses = 0;
                }
            }
        }
        let chi = optimize_weights(&m, &mut w, cfg.weight_sweeps).max(chi);
        (chi, us, w)
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Coordinate ascent on the simplex: for each `i`, a golden-section search along
/// `w(t) = (1 − t) w + t e_i`, `t ∈ [−w_i/(1 − w_i), 1]`. χ is concave in `w`,
/// so each line search finds the maximum on its segment.
fn optimize_weights(m: &Members, w: &mut [f64], sweeps: usize) -> f64 {
    let k = w.len();
    let mut best = m.chi(w);
    let mut trial = vec![0.0; k];
    for _ in 0..sweeps {
        for i in 0..k {
            if w[i] >= 1.0 - 1e-12 {
                continue;
            }
            let mut eval = |t: f64| {
                for j in 0..k {
                    trial[j] = (1.0 - t) * w[j];
                }
                trial[i] += t;
                for x in trial.iter_mut() {
                    *x = x.max(0.0);
                }
                m.chi(&trial)
            };
            let (mut lo, mut hi) = (-w[i] / (1.0 - w[i]), 1.0);
            let mut x1 = hi - INV_PHI * (hi - lo);
            let mut x2 = lo + INV_PHI * (hi - lo);
            let (mut f1, mut f2) = (eval(x1), eval(x2));
            for _ in 0..40 {
                if f1 < f2 {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + INV_PHI * (hi - lo);
                    f2 = eval(x2);
                } else {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - INV_PHI * (hi - lo);
                    f1 = eval(x1);
                }
            }
            let (t, f) = if f1 > f2 { (x1, f1) } else { (x2, f2) };
            if f > best {
                best = f;
                for x in &mut w[..k] {
                    *x *= 1.0 - t;
                }
                w[i] += t;
                let s: f64 = w.iter().map(|x| x.max(0.0)).sum();
                for x in w.iter_mut() {
                    *x = x.max(0.0) / s;
                }
            }
        }
    }
    m.chi(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{one_sided_depolarizing, BipartiteChannel};
    use crate::coding::closed_form::capacity_bell_one_sided_dep2;
    use crate::qops::bell_density;

    #[test]
    fn noiseless_bell_bounded_by_two() {
        let rho = bell_density(2).unwrap();
        let ch = BipartiteChannel::identity(2, 2);
        let r = brute_force_best_encoding(&rho, &ch, 4, 8, 1).unwrap();
        assert!(r.best_chi <= 2.0 + 1e-6);
        assert!(r.best_chi > 1.5, "search should get reasonably close: {}", r.best_chi);
    }

    #[test]
    fn bounded_by_formula() {
        let rho = bell_density(2).unwrap();
        let ch = one_sided_depolarizing(2, 0.3).unwrap();
        let r = brute_force_best_encoding(&rho, &ch, 4, 16, 3).unwrap();
        assert!(r.best_chi <= capacity_bell_one_sided_dep2(0.3).unwrap() + 1e-6);
        // the reported scheme reproduces the reported value
        let again = r.best_scheme.holevo(&rho, &ch).unwrap();
        assert!((again - r.best_chi).abs() < 1e-9);
    }

    #[test]
    fn deterministic_across_runs() {
        let rho = bell_density(2).unwrap();
        let ch = one_sided_depolarizing(2, 0.5).unwrap();
        let a = brute_force_best_encoding(&rho, &ch, 4, 6, 9).unwrap();
        let b = brute_force_best_encoding(&rho, &ch, 4, 6, 9).unwrap();
        assert_eq!(a.restart_values, b.restart_values);
        assert_eq!(a.best_restart, b.best_restart);
    }

    #[test]
    fn rejects_small_ensembles() {
        let rho = bell_density(2).unwrap();
        let ch = BipartiteChannel::identity(2, 2);
        assert!(brute_force_best_encoding(&rho, &ch, 3, 1, 0).is_err());
        assert!(brute_force_best_encoding(&rho, &ch, 4, 0, 0).is_err());
    }
}

//! Registry of numerically checked identities and inequalities.
//!
//! Every property reports a residual (an equality gap, or the amount by which an
//! inequality is violated) that is compared with a fixed tolerance.

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{
    default_p_grid, find_classical_limit_crossing, find_threshold_alpha, sweep_figure3, sweep_figure4, sweep_figure5,
    FIGURE3_ALPHAS,
};
use crate::channels::{
    depolarizing_spec, one_sided_depolarizing, pauli_channel, random_unitary_mixture, two_sided_depolarizing,
    verify_covariance, BipartiteChannel,
};
use crate::coding::{
    alpha_eigenvalues, builtin_candidates, capacity_alpha, capacity_bell_one_sided_dep2, capacity_bell_two_sided_dep2,
    capacity_unital, preprocessing_capacity, EncodingScheme,
};
use crate::error::Result;
use crate::linalg::{
    embed, hermitian_eigenvalues, partial_trace, relative_entropy, trace_sigma_log_rho, von_neumann_entropy,
    ComplexMatrix, DensityMatrix, Subsystem,
};
use crate::qops::{
    bell_density, bell_state, random_density, random_hermitian, random_unitary_with, schmidt_state, seeded_rng,
    su_generators, weyl_operator, weyl_operators, root_of_unity, SeededRng, WeylIndex,
};

/// Random trials per dimension for the identity checks.
pub const RANDOM_TRIALS: usize = 20;

type Check = fn(u64) -> Result<Measured>;

/// Largest residual over a number of checked instances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measured {
    pub residual: f64,
    pub trials: usize,
}

impl Measured {
    fn new() -> Self {
        Self {
            residual: 0.0,
            trials: 0,
        }
    }

    fn record(&mut self, r: f64) {
        // NaN must not pass silently
        self.residual = if r.is_nan() { f64::NAN } else { self.residual.max(r) };
        self.trials += 1;
    }
}

pub struct Property {
    pub name: &'static str,
    pub module: &'static str,
    pub tolerance: f64,
    check: Check,
}

impl std::fmt::Debug for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Property")
            .field("name", &self.name)
            .field("module", &self.module)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub module: String,
    pub residual: f64,
    pub tolerance: f64,
    pub trials: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Property {
    pub fn run(&self, seed: u64) -> PropertyReport {
        let (residual, trials, error) = match (self.check)(seed) {
            Ok(m) => (m.residual, m.trials, None),
            Err(e) => (f64::NAN, 0, Some(e.to_string())),
        };
        PropertyReport {
            name: self.name.into(),
            module: self.module.into(),
            residual,
            tolerance: self.tolerance,
            trials,
            passed: error.is_none() && trials > 0 && residual < self.tolerance,
            error,
        }
    }
}

macro_rules! property {
    ($name:literal, $module:literal, $tol:expr, $check:expr) => {
        Property {
            name: $name,
            module: $module,
            tolerance: $tol,
            check: $check,
        }
    };
}

static PROPERTIES: &[Property] = &[
    property!("eigen_characteristic_polynomial", "linalg", 1e-6, eigen_characteristic_polynomial),
    property!("entropy_additivity", "linalg", 1e-8, entropy_additivity),
    property!("entropy_unitary_invariance", "linalg", 1e-8, entropy_unitary_invariance),
    property!("donald_decomposition", "linalg", 1e-7, donald_decomposition),
    property!("klein_inequality", "linalg", 1e-9, klein_inequality),
    property!("weyl_group_law", "qops", 1e-10, weyl_group_law),
    property!("bell_inner_product_vanishing", "qops", 1e-9, bell_inner_product_vanishing),
    property!("encoded_bell_orthogonality", "qops", 1e-9, encoded_bell_orthogonality),
    property!("weyl_ensemble_average", "qops", 1e-9, weyl_ensemble_average),
    property!("depolarizing_rotated_generators", "channels", 1e-9, depolarizing_rotated_generators),
    property!("depolarizing_generators", "channels", 1e-9, depolarizing_generators),
    property!("weyl_average_local_form", "channels", 1e-9, weyl_average_local_form),
    property!("weyl_average_cross_entropy", "channels", 1e-7, weyl_average_cross_entropy),
    property!("weyl_average_relative_entropy", "channels", 1e-7, weyl_average_relative_entropy),
    property!("depolarizing_covariance", "channels", 1e-9, depolarizing_covariance),
    property!("channel_linearity", "channels", 1e-10, channel_linearity),
    property!("unitary_encodings_dominated", "dense-coding", 1e-7, unitary_encodings_dominated),
    property!("alpha_cross_path", "dense-coding", 1e-8, alpha_cross_path),
    property!("alpha_output_spectrum", "dense-coding", 1e-9, alpha_output_spectrum),
    property!("alpha_reduced_spectrum", "dense-coding", 1e-10, alpha_reduced_spectrum),
    property!("local_unitary_invariance", "dense-coding", 1e-8, local_unitary_invariance),
    property!("mixed_state_bound", "dense-coding", 1e-7, mixed_state_bound),
    property!("preprocessing_never_hurts", "dense-coding", 1e-9, preprocessing_never_hurts),
    property!("bisection_convergence", "analysis", 1e-9, bisection_convergence),
    property!("sweeps_finite_and_bounded", "analysis", 1e-12, sweeps_finite_and_bounded),
    property!("bell_capacity_monotone", "analysis", 1e-12, bell_capacity_monotone),
];

pub fn properties() -> &'static [Property] {
    PROPERTIES
}

pub fn find_property(name: &str) -> Option<&'static Property> {
    PROPERTIES.iter().find(|p| p.name == name)
}

/// Runs every registered property; report order follows the registry.
pub fn run_all(seed: u64) -> Vec<PropertyReport> {
    PROPERTIES.par_iter().map(|p| p.run(seed)).collect()
}

// ---- helpers ----

fn rng_for(seed: u64, salt: u64) -> SeededRng {
    seeded_rng(seed ^ salt.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// Encodes `U` on Alice's side of `rho`.
fn encode(rho: &DensityMatrix, u: &ComplexMatrix) -> DensityMatrix {
    let (_, db) = rho.bipartite_dims().expect("bipartite input");
    rho.conjugate_by(&embed(u, Subsystem::A, db))
}

/// Random product of random-unitary channels on both sides.
fn random_unital(d: usize, rng: &mut SeededRng) -> BipartiteChannel {
    let a = random_unitary_mixture(d, 3, rng);
    let b = random_unitary_mixture(d, 3, rng);
    BipartiteChannel::product(&a, &b)
}

/// Weyl-ensemble average after the channel.
fn weyl_average(rho: &DensityMatrix, ch: &BipartiteChannel) -> Result<DensityMatrix> {
    let (da, _) = rho.bipartite_dims()?;
    Ok(EncodingScheme::weyl(da)?.ensemble(rho, ch)?.average())
}

/// Determinant by Gaussian elimination with partial pivoting.
fn determinant(m: &ComplexMatrix) -> Complex64 {
    let n = m.dim();
    let mut a: Vec<Vec<Complex64>> = (0..n).map(|r| (0..n).map(|c| m[(r, c)]).collect()).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("non-empty range");
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            let pivot_row = a[col].clone();
            for (x, v) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * v;
            }
        }
    }
    det
}

// ---- linalg ----

fn eigen_characteristic_polynomial(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 1);
    let mut m = Measured::new();
    for i in 0..1000 {
        let d = 1 + i % 16;
        let h = random_hermitian(d, &mut rng);
        for &lambda in &hermitian_eigenvalues(&h)?.eigenvalues {
            let mut shifted = h.clone();
            shifted.add_scaled(-lambda, &ComplexMatrix::identity(d));
            // det(λI − H) is monic, so no further normalization
            m.record(determinant(&shifted).norm());
        }
    }
    Ok(m)
}

fn entropy_additivity(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 2);
    let mut m = Measured::new();
    for i in 0..40 {
        let (da, db) = (2 + i % 3, 2 + (i / 3) % 3);
        let a = random_density(&[da], &mut rng);
        let b = random_density(&[db], &mut rng);
        let joint = von_neumann_entropy(&a.tensor(&b));
        m.record((joint - von_neumann_entropy(&a) - von_neumann_entropy(&b)).abs());
    }
    Ok(m)
}

fn entropy_unitary_invariance(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 3);
    let mut m = Measured::new();
    for i in 0..40 {
        let d = 2 + i % 7;
        let rho = random_density(&[d], &mut rng);
        let u = random_unitary_with(d, &mut rng);
        m.record((von_neumann_entropy(&rho.conjugate_by(&u)) - von_neumann_entropy(&rho)).abs());
    }
    Ok(m)
}

fn donald_decomposition(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 4);
    let mut m = Measured::new();
    for i in 0..40 {
        let d = 2 + i % 3;
        let k = 2 + i % 4;
        let states: Vec<DensityMatrix> = (0..k).map(|_| random_density(&[d], &mut rng)).collect();
        let raw: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 0.05).collect();
        let total: f64 = raw.iter().sum();
        let w: Vec<f64> = raw.iter().map(|x| x / total).collect();
        let reference = random_density(&[d], &mut rng);
        let avg = DensityMatrix::mixture(&w, &states)?;
        let mut lhs = 0.0;
        let mut rhs = relative_entropy(&avg, &reference)?;
        for (p, s) in w.iter().zip(&states) {
            lhs += p * relative_entropy(s, &reference)?;
            rhs += p * relative_entropy(s, &avg)?;
        }
        m.record((lhs - rhs).abs());
    }
    Ok(m)
}

fn klein_inequality(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 5);
    let mut m = Measured::new();
    for i in 0..60 {
        let d = 2 + i % 5;
        let s = random_density(&[d], &mut rng);
        let r = random_density(&[d], &mut rng);
        m.record((-relative_entropy(&s, &r)?).max(0.0));
    }
    Ok(m)
}

// ---- qops ----

fn weyl_group_law(_seed: u64) -> Result<Measured> {
    let mut m = Measured::new();
    for d in 2..=5 {
        for a in WeylIndex::all(d) {
            for b in WeylIndex::all(d) {
                let lhs = &weyl_operator(a) * &weyl_operator(b);
                let sum = WeylIndex::new(d, (a.m() + b.m()) % d, (a.n() + b.n()) % d)?;
                let phase = root_of_unity((b.n() * a.m()) as i64, d);
                m.record(lhs.max_abs_diff(&weyl_operator(sum).scale(phase)));
            }
        }
    }
    Ok(m)
}

fn bell_inner_product_vanishing(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 6);
    let mut m = Measured::new();
    for d in [2, 3] {
        let psi = bell_state(d, WeylIndex::new(d, 0, 0)?)?;
        let ops = weyl_operators(d)?;
        for _ in 0..50 {
            let u = random_unitary_with(d, &mut rng);
            for (i, vi) in ops.iter().enumerate() {
                for (j, vj) in ops.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let w = &(&(&u.adjoint() * &vi.adjoint()) * vj) * &u;
                    let phi = embed(&w, Subsystem::A, d).apply(psi.amplitudes());
                    let overlap: Complex64 = psi.amplitudes().iter().zip(&phi).map(|(a, b)| a.conj() * b).sum();
                    m.record(overlap.norm());
                }
            }
        }
    }
    Ok(m)
}

fn encoded_bell_orthogonality(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 7);
    let mut m = Measured::new();
    for d in [2, 3] {
        let rho = bell_density(d)?;
        for _ in 0..RANDOM_TRIALS {
            let u = random_unitary_with(d, &mut rng);
            let pis: Vec<ComplexMatrix> = weyl_operators(d)?
                .iter()
                .map(|v| encode(&rho, &(v * &u)).into_matrix())
                .collect();
            for (i, a) in pis.iter().enumerate() {
                for (j, b) in pis.iter().enumerate() {
                    if i != j {
                        m.record((a * b).max_abs());
                    }
                }
            }
        }
    }
    Ok(m)
}

fn weyl_ensemble_average(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 8);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..RANDOM_TRIALS {
            let rho = random_density(&[d, d], &mut rng);
            let avg = weyl_average(&rho, &BipartiteChannel::identity(d, d))?;
            let rho_b = partial_trace(&rho, Subsystem::B)?;
            let expected = ComplexMatrix::identity(d).kron(rho_b.matrix()).scale_real(1.0 / d as f64);
            m.record(avg.matrix().max_abs_diff(&expected));
        }
    }
    Ok(m)
}

// ---- channels ----

fn depolarizing_rotated_generators(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 9);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..RANDOM_TRIALS {
            let p: f64 = rng.random();
            let dep = pauli_channel(&depolarizing_spec(d, p)?)?;
            let u = random_unitary_with(d, &mut rng);
            for g in su_generators(d)? {
                let rotated = g.conjugate_by(&u);
                m.record(dep.apply_matrix(&rotated).max_abs_diff(&rotated.scale_real(1.0 - p)));
            }
        }
    }
    Ok(m)
}

fn depolarizing_generators(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 10);
    let mut m = Measured::new();
    for d in [2, 3, 4] {
        for _ in 0..5 {
            let p: f64 = rng.random();
            let dep = pauli_channel(&depolarizing_spec(d, p)?)?;
            for g in su_generators(d)? {
                m.record(dep.apply_matrix(&g).max_abs_diff(&g.scale_real(1.0 - p)));
            }
        }
    }
    Ok(m)
}

fn weyl_average_local_form(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 11);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..RANDOM_TRIALS {
            let rho = random_density(&[d, d], &mut rng);
            let a = random_unitary_mixture(d, 3, &mut rng);
            let b = random_unitary_mixture(d, 3, &mut rng);
            let ch = BipartiteChannel::product(&a, &b);
            let avg = weyl_average(&rho, &ch)?;
            let rho_b = partial_trace(&rho, Subsystem::B)?;
            let expected = ComplexMatrix::identity(d).kron(&b.apply_matrix(rho_b.matrix()).scale_real(1.0 / d as f64));
            m.record(avg.matrix().max_abs_diff(&expected));
        }
    }
    Ok(m)
}

fn weyl_average_cross_entropy(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 12);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..RANDOM_TRIALS {
            let rho = random_density(&[d, d], &mut rng);
            let ch = random_unital(d, &mut rng);
            let avg = weyl_average(&rho, &ch)?;
            let tau = encode(&rho, &random_unitary_with(d, &mut rng));
            let lhs = trace_sigma_log_rho(&ch.apply(&tau)?, &avg)?;
            m.record((lhs + von_neumann_entropy(&avg)).abs());
        }
    }
    Ok(m)
}

fn weyl_average_relative_entropy(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 13);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..RANDOM_TRIALS {
            let rho = random_density(&[d, d], &mut rng);
            let ch = random_unital(d, &mut rng);
            let avg = weyl_average(&rho, &ch)?;
            let out = ch.apply(&encode(&rho, &random_unitary_with(d, &mut rng)))?;
            let rel = relative_entropy(&out, &avg)?;
            m.record((rel - (von_neumann_entropy(&avg) - von_neumann_entropy(&out))).abs());
        }
    }
    Ok(m)
}

fn depolarizing_covariance(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 14);
    let mut m = Measured::new();
    for d in [2, 3] {
        for t in 0..RANDOM_TRIALS {
            let ch = two_sided_depolarizing(d, rng.random())?;
            let report = verify_covariance(&ch, 1, seed.wrapping_add(t as u64));
            m.record(report.max_difference);
            // and the entropy statement that follows from it
            let rho = random_density(&[d, d], &mut rng);
            let u = random_unitary_with(d, &mut rng).kron(&random_unitary_with(d, &mut rng));
            let rotated = von_neumann_entropy(&ch.apply(&rho.conjugate_by(&u))?);
            m.record((rotated - von_neumann_entropy(&ch.apply(&rho)?)).abs());
        }
    }
    Ok(m)
}

fn channel_linearity(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 15);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..10 {
            let ch = random_unital(d, &mut rng);
            let states: Vec<DensityMatrix> = (0..3).map(|_| random_density(&[d, d], &mut rng)).collect();
            let w = [0.5, 0.3, 0.2];
            let lhs = ch.apply(&DensityMatrix::mixture(&w, &states)?)?;
            let outs = states.iter().map(|s| ch.apply(s)).collect::<Result<Vec<_>>>()?;
            let rhs = DensityMatrix::mixture(&w, &outs)?;
            m.record(lhs.matrix().max_abs_diff(rhs.matrix()));
            // complete positivity: the output of a valid state stays positive
            m.record((-lhs.spectrum().min()).max(0.0));
        }
    }
    Ok(m)
}

// ---- dense coding ----

fn unitary_encodings_dominated(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 16);
    let mut m = Measured::new();
    let rho = bell_density(2)?;
    for p in [0.1, 0.5, 0.9] {
        let ch = one_sided_depolarizing(2, p)?;
        let bound = capacity_bell_one_sided_dep2(p)?;
        for i in 0..200 {
            let k = 2 + i % 5;
            let us = (0..k).map(|_| random_unitary_with(2, &mut rng)).collect();
            let raw: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 1e-3).collect();
            let total: f64 = raw.iter().sum();
            let scheme = EncodingScheme::custom(us, raw.iter().map(|x| x / total).collect())?;
            m.record((scheme.holevo(&rho, &ch)? - bound).max(0.0));
        }
    }
    Ok(m)
}

/// 21 × 21 grid, α ∈ [0, 1/2] and p ∈ [0, 1].
fn alpha_grid() -> impl Iterator<Item = (f64, f64)> {
    (0..21).flat_map(|i| (0..21).map(move |j| (0.025 * i as f64, 0.05 * j as f64)))
}

fn alpha_cross_path(_seed: u64) -> Result<Measured> {
    let rows: Vec<Result<f64>> = alpha_grid()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(a, p)| {
            let general = capacity_unital(&schmidt_state(a)?.density(), &two_sided_depolarizing(2, p)?)?;
            Ok((general.value - capacity_alpha(a, p)?).abs())
        })
        .collect();
    let mut m = Measured::new();
    for r in rows {
        m.record(r?);
    }
    Ok(m)
}

fn sorted_gap(mut actual: Vec<f64>, mut expected: Vec<f64>) -> f64 {
    actual.sort_by(|x, y| y.total_cmp(x));
    expected.sort_by(|x, y| y.total_cmp(x));
    actual.iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn alpha_output_spectrum(_seed: u64) -> Result<Measured> {
    let mut m = Measured::new();
    for (a, p) in alpha_grid() {
        let out = two_sided_depolarizing(2, p)?.apply(&schmidt_state(a)?.density())?;
        let expected = alpha_eigenvalues(a, p)?.gamma.to_vec();
        m.record(sorted_gap(out.spectrum().eigenvalues, expected));
    }
    Ok(m)
}

fn alpha_reduced_spectrum(_seed: u64) -> Result<Measured> {
    let mut m = Measured::new();
    for (a, p) in alpha_grid() {
        let dep = pauli_channel(&depolarizing_spec(2, p)?)?;
        let rho_b = partial_trace(&schmidt_state(a)?.density(), Subsystem::B)?;
        let out = dep.apply(&rho_b)?;
        m.record(sorted_gap(out.spectrum().eigenvalues, alpha_eigenvalues(a, p)?.xi.to_vec()));
    }
    Ok(m)
}

fn local_unitary_invariance(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 19);
    let mut m = Measured::new();
    for d in [2, 3] {
        for _ in 0..10 {
            let ch = two_sided_depolarizing(d, rng.random())?;
            let rho = random_density(&[d, d], &mut rng);
            let u = random_unitary_with(d, &mut rng).kron(&random_unitary_with(d, &mut rng));
            let a = capacity_unital(&rho, &ch)?.value;
            let b = capacity_unital(&rho.conjugate_by(&u), &ch)?.value;
            m.record((a - b).abs());
        }
    }
    Ok(m)
}

fn mixed_state_bound(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 20);
    let mut m = Measured::new();
    for p in [0.2, 0.5] {
        let ch = two_sided_depolarizing(2, p)?;
        let bound = capacity_alpha(0.5, p)?.max(capacity_alpha(0.0, p)?);
        for _ in 0..100 {
            let rho = random_density(&[2, 2], &mut rng);
            m.record((capacity_unital(&rho, &ch)?.value - bound).max(0.0));
        }
    }
    Ok(m)
}

fn preprocessing_never_hurts(seed: u64) -> Result<Measured> {
    let mut rng = rng_for(seed, 21);
    let mut m = Measured::new();
    let candidates = builtin_candidates(2)?;
    for p in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0] {
        let ch = two_sided_depolarizing(2, p)?;
        let mut states = vec![bell_density(2)?];
        states.extend((0..5).map(|_| random_density(&[2, 2], &mut rng)));
        for rho in &states {
            let pre = preprocessing_capacity(rho, &ch, &candidates)?.value;
            m.record((capacity_unital(rho, &ch)?.value - pre).max(0.0));
        }
    }
    Ok(m)
}

// ---- analysis ----

fn bisection_convergence(_seed: u64) -> Result<Measured> {
    let mut m = Measured::new();
    for r in [find_threshold_alpha()?, find_classical_limit_crossing()?] {
        let inside = r.root >= r.bracket.0 && r.root <= r.bracket.1;
        let ok = inside && r.iterations <= crate::analysis::root::MAX_ITERATIONS;
        m.record(if ok { r.residual } else { f64::INFINITY });
    }
    Ok(m)
}

fn sweeps_finite_and_bounded(_seed: u64) -> Result<Measured> {
    let grid = default_p_grid();
    let mut m = Measured::new();
    for sweep in [sweep_figure3(&FIGURE3_ALPHAS, &grid)?, sweep_figure4(&grid)?, sweep_figure5(&grid)?] {
        for s in &sweep.series {
            for &v in &s.values {
                let outside = if v.is_finite() { (-v).max(v - 2.0).max(0.0) } else { f64::INFINITY };
                m.record(outside);
            }
        }
    }
    Ok(m)
}

fn bell_capacity_monotone(_seed: u64) -> Result<Measured> {
    let grid = default_p_grid();
    let mut m = Measured::new();
    for f in [capacity_bell_one_sided_dep2, capacity_bell_two_sided_dep2] {
        let values = grid.iter().map(|&p| f(p)).collect::<Result<Vec<_>>>()?;
        for w in values.windows(2) {
            m.record((w[1] - w[0]).max(0.0));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = ComplexMatrix::from_real(2, &[1.0, 2.0, 3.0, 4.0]);
        assert!((determinant(&m) - Complex64::new(-2.0, 0.0)).norm() < 1e-14);
        let p = ComplexMatrix::from_real(3, &[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!((determinant(&p) + 1.0).norm() < 1e-14);
    }

    #[test]
    fn names_unique() {
        let mut names: Vec<&str> = properties().iter().map(|p| p.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), properties().len());
    }
}

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{ComplexMatrix, DensityMatrix};

/// Seeded generator used throughout the crate.
pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian sample (`E|z|² = 1`).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, |_, _| complex_gaussian(rng))
}

/// Haar-random unitary from a fixed seed.
pub fn random_unitary(d: usize, seed: u64) -> ComplexMatrix {
    random_unitary_with(d, &mut seeded_rng(seed))
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the diagonal of R
/// made real positive, so Q carries the Haar measure.
pub fn random_unitary_with<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    orthonormalize_columns(&ginibre(d, rng))
}

/// Gram–Schmidt on the columns of `a` (two passes); the implied R has a positive diagonal.
pub(crate) fn orthonormalize_columns(a: &ComplexMatrix) -> ComplexMatrix {
    let d = a.dim();
    let mut cols: Vec<Vec<Complex64>> = (0..d).map(|c| (0..d).map(|r| a[(r, c)]).collect()).collect();
    for j in 0..d {
        for _pass in 0..2 {
            let (done, rest) = cols.split_at_mut(j);
            for q in done.iter() {
                let proj: Complex64 = q.iter().zip(&rest[0]).map(|(a, b)| a.conj() * b).sum();
                for (z, &qr) in rest[0].iter_mut().zip(q) {
                    *z -= proj * qr;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    ComplexMatrix::from_fn(d, |r, c| cols[c][r])
}

/// Unitary close to the identity: Gram–Schmidt of `I + ε G`.
pub fn perturb_unitary<R: Rng + ?Sized>(u: &ComplexMatrix, eps: f64, rng: &mut R) -> ComplexMatrix {
    let d = u.dim();
    let mut near = ComplexMatrix::identity(d);
    near.add_scaled(eps, &ginibre(d, rng));
    &orthonormalize_columns(&near) * u
}

/// Random full-rank mixed state `G G† / tr(G G†)` on the given subsystems.
pub fn random_density<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> DensityMatrix {
    let n: usize = dims.iter().product();
    let g = ginibre(n, rng);
    DensityMatrix::from_positive(&g * &g.adjoint(), dims.to_vec())
}

/// Random pure state, Haar distributed.
pub fn random_pure<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> DensityMatrix {
    let n: usize = dims.iter().product();
    let mut v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|z| *z /= norm);
    DensityMatrix::from_trusted(ComplexMatrix::outer(&v), dims.to_vec())
}

/// Random Hermitian matrix with spectrum of order one (GUE scaled by `1/√d`).
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(d, rng);
    (&g + &g.adjoint()).scale_real(0.5 / (d as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_for_many_seeds() {
        for seed in 0..100 {
            for d in [2, 3, 4, 8] {
                assert!(random_unitary(d, seed).is_unitary(1e-10));
            }
        }
    }

    #[test]
    fn seed_reproducible() {
        assert_eq!(random_unitary(3, 42), random_unitary(3, 42));
        assert_ne!(random_unitary(3, 42), random_unitary(3, 43));
    }

    #[test]
    fn first_moment_vanishes() {
        // Monte-Carlo: E[U_ij] = 0 and E|U_ij|² = 1/d under Haar measure
        let d = 3;
        let samples = 10_000;
        let mut rng = seeded_rng(7);
        let mut mean = vec![Complex64::new(0.0, 0.0); d * d];
        let mut second = vec![0.0; d * d];
        for _ in 0..samples {
            let u = random_unitary_with(d, &mut rng);
            for (k, z) in u.entries().iter().enumerate() {
                mean[k] += z;
                second[k] += z.norm_sqr();
            }
        }
        // per real component variance 1/(2d); 3σ bound on the mean
        let sigma = (1.0 / (2.0 * d as f64) / samples as f64).sqrt();
        for k in 0..d * d {
            let m = mean[k] / samples as f64;
            assert!(m.re.abs() < 3.0 * sigma && m.im.abs() < 3.0 * sigma, "entry {k}: {m}");
            assert!((second[k] / samples as f64 - 1.0 / d as f64).abs() < 0.02);
        }
    }

    #[test]
    fn random_density_is_valid() {
        let mut rng = seeded_rng(1);
        for _ in 0..20 {
            let r = random_density(&[2, 3], &mut rng);
            assert!(DensityMatrix::new(r.matrix().clone(), vec![2, 3]).is_ok());
        }
    }
}

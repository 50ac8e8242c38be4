use serde::{Deserialize, Serialize};

use crate::coding::{capacity_alpha, capacity_bell_one_sided_dep2};
use crate::error::{Error, Result};

pub const MAX_ITERATIONS: usize = 60;
pub const WIDTH_TOL: f64 = 1e-10;
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub root: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub residual: f64,
}

/// Bisection on `[lo, hi]`; stops once the bracket is narrower than
/// [`WIDTH_TOL`] and `|f(mid)| < RESIDUAL_TOL`, or after [`MAX_ITERATIONS`].
pub fn bisect(f: impl Fn(f64) -> Result<f64>, lo: f64, hi: f64) -> Result<RootReport> {
    let (mut a, mut b) = (lo, hi);
    let (f_lo, f_hi) = (f(a)?, f(b)?);
    if f_lo == 0.0 {
        return Ok(RootReport { root: a, bracket: (lo, hi), iterations: 0, residual: 0.0 });
    }
    if f_hi == 0.0 {
        return Ok(RootReport { root: b, bracket: (lo, hi), iterations: 0, residual: 0.0 });
    }
    if f_lo.signum() == f_hi.signum() || !f_lo.is_finite() || !f_hi.is_finite() {
        return Err(Error::BracketSign { lo, hi, f_lo, f_hi });
    }
    let mut fa = f_lo;
    let mut mid = 0.5 * (a + b);
    let mut fm = f(mid)?;
    let mut iterations = 1;
    while iterations < MAX_ITERATIONS && !(b - a < WIDTH_TOL && fm.abs() < RESIDUAL_TOL) {
        if fm == 0.0 {
            break;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        mid = 0.5 * (a + b);
        fm = f(mid)?;
        iterations += 1;
    }
    Ok(RootReport {
        root: mid,
        bracket: (lo, hi),
        iterations,
        residual: fm.abs(),
    })
}

/// Noise level where the Bell state and a product state give the same
/// capacity over two-sided qubit depolarizing noise.
pub fn find_threshold_alpha() -> Result<RootReport> {
    bisect(|p| Ok(capacity_alpha(0.5, p)? - capacity_alpha(0.0, p)?), 0.2, 0.5)
}

/// Noise level where the one-sided Bell capacity drops to one bit.
pub fn find_classical_limit_crossing() -> Result<RootReport> {
    bisect(|p| Ok(capacity_bell_one_sided_dep2(p)? - 1.0), 0.1, 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0).unwrap();
        assert!((r.root - std::f64::consts::SQRT_2).abs() < 1e-10);
        assert!(r.residual < RESIDUAL_TOL);
        assert!(r.iterations <= MAX_ITERATIONS);
    }

    #[test]
    fn sign_check() {
        assert!(matches!(bisect(|x| Ok(x * x + 1.0), -1.0, 1.0), Err(Error::BracketSign { .. })));
    }

    #[test]
    fn threshold_bracket_signs() {
        let f = |p: f64| capacity_alpha(0.5, p).unwrap() - capacity_alpha(0.0, p).unwrap();
        assert!((f(0.0) - 1.0).abs() < 1e-15);
        assert!(f(0.2) > 0.0 && f(0.5) < 0.0);
        assert!(f(1.0).abs() < 1e-15);
    }

    #[test]
    fn located_roots() {
        let t = find_threshold_alpha().unwrap();
        assert!((0.344..=0.346).contains(&t.root), "{t:?}");
        let c = find_classical_limit_crossing().unwrap();
        assert!((0.251..=0.253).contains(&c.root), "{c:?}");
        assert!((c.root - 0.252_386_166_553_642_4).abs() < 1e-9);
    }
}

//! Total quantum dimension of SU(3)_k, computed three independent ways:
//! the closed trigonometric formula, the Perron eigenvalue of the adjacency
//! matrix of `D_k`, and the reciprocal of the smallest positive root of
//! `det F_k`. This is the only module that uses floating point.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::genfunc::system_det;
use crate::lattice::Lattice;
use crate::poly::IntPoly;

pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;
/// Bracketing grid step for root isolation.
pub const ROOT_GRID_STEP: f64 = 1.0 / 1024.0;
pub const DEFAULT_ROOT_UPPER: f64 = 1.5;

/// `sin(pi N / (N + k)) / sin(pi / (N + k))`.
pub fn lambda_trig(n: u32, k: u32) -> f64 {
    let denom = f64::from(n) + f64::from(k);
    libm::sin(PI * f64::from(n) / denom) / libm::sin(PI / denom)
}

/// Dominant eigenvalue of the adjacency matrix of `D_k`.
///
/// Every cycle of `D_k` has length divisible by 3, so the adjacency matrix
/// has three eigenvalues of maximal modulus. Power iteration runs on its
/// cube, whose dominant eigenvalue is real and simple on each cyclic class,
/// and the real cube root is returned.
pub fn lambda_perron(k: u32, tol: f64) -> Result<f64> {
    lambda_perron_with(k, tol, DEFAULT_MAX_ITERATIONS)
}

pub fn lambda_perron_with(k: u32, tol: f64, max_iterations: usize) -> Result<f64> {
    let adj = Lattice::new(k)?.adjacency();
    let dim = adj.dim();
    let base: Vec<f64> = (0..dim * dim)
        .map(|e| f64::from(adj.get(e / dim, e % dim)))
        .collect();
    let square = mat_mul(&base, &base, dim);
    let cube = mat_mul(&square, &base, dim);

    let mut x = alloc::vec![1.0 / libm::sqrt(dim as f64); dim];
    let mut previous = f64::NAN;
    for _ in 0..max_iterations {
        let y = mat_vec(&cube, &x, dim);
        let rayleigh: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let norm = libm::sqrt(y.iter().map(|v| v * v).sum());
        if norm == 0.0 {
            return Err(Error::NoConvergence { iterations: 0 });
        }
        x = y.into_iter().map(|v| v / norm).collect();
        if libm::fabs(rayleigh - previous) < tol {
            return Ok(libm::cbrt(rayleigh));
        }
        previous = rayleigh;
    }
    Err(Error::NoConvergence {
        iterations: max_iterations,
    })
}

fn mat_mul(a: &[f64], b: &[f64], dim: usize) -> Vec<f64> {
    let mut out = alloc::vec![0.0; dim * dim];
    for r in 0..dim {
        for m in 0..dim {
            let x = a[r * dim + m];
            if x == 0.0 {
                continue;
            }
            for c in 0..dim {
                out[r * dim + c] += x * b[m * dim + c];
            }
        }
    }
    out
}

fn mat_vec(a: &[f64], x: &[f64], dim: usize) -> Vec<f64> {
    (0..dim)
        .map(|r| a[r * dim..(r + 1) * dim].iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// Smallest positive root of `p`, bracketed on a grid of step 1/1024 over
/// `(0, 1.5]` and refined by bisection until the bracket is narrower than `tol`.
pub fn smallest_positive_root(p: &IntPoly, tol: f64) -> Result<f64> {
    smallest_positive_root_below(p, tol, DEFAULT_ROOT_UPPER)
}

pub fn smallest_positive_root_below(p: &IntPoly, tol: f64, upper: f64) -> Result<f64> {
    let steps = libm::ceil(upper / ROOT_GRID_STEP) as u64;
    let mut lo = 0.0;
    let mut f_lo = p.eval_f64(lo);
    for s in 1..=steps {
        let hi = (s as f64 * ROOT_GRID_STEP).min(upper);
        let f_hi = p.eval_f64(hi);
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if (f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0 {
            return Ok(bisect(p, lo, hi, f_lo, tol));
        }
        lo = hi;
        f_lo = f_hi;
    }
    Err(Error::NoRootFound { upper })
}

fn bisect(p: &IntPoly, mut lo: f64, mut hi: f64, f_lo: f64, tol: f64) -> f64 {
    let lo_negative = f_lo < 0.0;
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = p.eval_f64(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Natural logarithm of a positive big integer, usable past the `f64` range.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    libm::log(top) + shift as f64 * LN_2
}

/// `count^(1/n)`, the empirical growth rate of `n`-step walk counts.
pub fn growth_rate(count: &BigUint, n: u32) -> f64 {
    libm::exp(ln_biguint(count) / f64::from(n))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub k: u32,
    pub lambda_trig: f64,
    pub lambda_perron: f64,
    pub rho_root: f64,
    pub lambda_from_root: f64,
    /// Largest pairwise absolute difference between the three lambdas.
    pub agreement_gap: f64,
    /// `rho_k * k^(2/3)`, which should stay of order one.
    pub rho_scaled: f64,
}

impl SpectralReport {
    pub fn agrees(&self, tol: f64) -> bool {
        self.agreement_gap < tol
    }
}

/// Compute all three estimates of `lambda_k` for `SU(3)_k`.
///
/// `tol` is the internal tolerance of the power iteration and bisection.
pub fn spectral_report(k: u32, tol: f64) -> Result<SpectralReport> {
    let lambda_trig = lambda_trig(3, k);
    let lambda_perron = lambda_perron(k, tol)?;
    let det = system_det(k)?;
    let rho_root = smallest_positive_root(&det, tol)?;
    let lambda_from_root = 1.0 / rho_root;
    let values = [lambda_trig, lambda_perron, lambda_from_root];
    let mut gap: f64 = 0.0;
    for (idx, a) in values.iter().enumerate() {
        for b in &values[idx + 1..] {
            gap = gap.max(libm::fabs(a - b));
        }
    }
    Ok(SpectralReport {
        k,
        lambda_trig,
        lambda_perron,
        rho_root,
        lambda_from_root,
        agreement_gap: gap,
        rho_scaled: rho_root * libm::pow(f64::from(k), 2.0 / 3.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: f64 = 1.618_033_988_749_895;

    #[test]
    fn trig_values() {
        assert!((lambda_trig(3, 1) - 1.0).abs() < 1e-12);
        assert!((lambda_trig(3, 2) - GOLDEN).abs() < 1e-12);
        assert!((lambda_trig(3, 3) - 2.0).abs() < 1e-12);
        let big = lambda_trig(3, 100);
        assert!(big < 3.0 && big > 2.99);
        // SU(2)_k reduces to 2 cos(pi/(k+2))
        assert!((lambda_trig(2, 2) - libm::sqrt(2.0)).abs() < 1e-12);
    }

    #[test]
    fn trig_strictly_increasing() {
        for k in 1..12 {
            assert!(lambda_trig(3, k) < lambda_trig(3, k + 1));
        }
    }

    #[test]
    fn perron_values() {
        assert!((lambda_perron(1, 1e-12).unwrap() - 1.0).abs() < 1e-9);
        assert!((lambda_perron(2, 1e-12).unwrap() - GOLDEN).abs() < 1e-9);
        let seven = lambda_trig(3, 4);
        assert!((lambda_perron(4, 1e-12).unwrap() - seven).abs() < 1e-9);
    }

    #[test]
    fn perron_budget_exhaustion() {
        assert_eq!(
            lambda_perron_with(6, 1e-300, 3),
            Err(Error::NoConvergence { iterations: 3 })
        );
    }

    #[test]
    fn root_examples() {
        let p1: IntPoly = "1 - 1*t^3".parse().unwrap();
        assert_eq!(smallest_positive_root(&p1, 1e-12).unwrap(), 1.0);

        let p2: IntPoly = "1 - 4*t^3 - 1*t^6".parse().unwrap();
        // u = t^3 solves u^2 + 4u - 1 = 0, so u = sqrt(5) - 2
        let oracle = libm::cbrt(libm::sqrt(5.0) - 2.0);
        let rho2 = smallest_positive_root(&p2, 1e-14).unwrap();
        assert!((rho2 - oracle).abs() < 1e-12);
        assert!((1.0 / rho2 - 2.0 * libm::cos(PI / 5.0)).abs() < 1e-9);

        let p3: IntPoly = "1 - 9*t^3 + 9*t^6 - 8*t^9".parse().unwrap();
        assert_eq!(smallest_positive_root(&p3, 1e-12).unwrap(), 0.5);
    }

    #[test]
    fn root_not_found() {
        let p: IntPoly = "1 + 1*t^2".parse().unwrap();
        assert_eq!(
            smallest_positive_root(&p, 1e-12),
            Err(Error::NoRootFound { upper: 1.5 })
        );
    }

    #[test]
    fn report_small_levels() {
        for (k, lambda) in [(1, 1.0), (3, 2.0)] {
            let r = spectral_report(k, 1e-12).unwrap();
            for v in [r.lambda_trig, r.lambda_perron, r.lambda_from_root] {
                assert!((v - lambda).abs() < 1e-9, "k={k} {r:?}");
            }
        }
    }

    #[test]
    fn log_of_huge_integers() {
        let x = BigUint::from(3u32).pow(2000);
        let expect = 2000.0 * libm::log(3.0);
        assert!((ln_biguint(&x) - expect).abs() / expect < 1e-12);
        assert!((growth_rate(&x, 2000) - 3.0).abs() < 1e-9);
    }
}

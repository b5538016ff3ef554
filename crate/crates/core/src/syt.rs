//! Standard Young tableaux with at most three rows.
//!
//! A walk of length `n` on `D_k` from the origin is the growth history of a
//! standard tableau; when `k >= n` the level cap never binds and the count at
//! a vertex is the number of standard tableaux of the matching shape.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Vertex;

pub const DEFAULT_BRUTE_FORCE_CAP: u32 = 18;

/// Row lengths `r1 >= r2 >= r3 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape3 {
    r1: u32,
    r2: u32,
    r3: u32,
}

impl Shape3 {
    pub fn new(r1: u32, r2: u32, r3: u32) -> Result<Self> {
        if r1 < r2 || r2 < r3 {
            return Err(Error::InvalidShape { rows: [r1, r2, r3] });
        }
        Ok(Shape3 { r1, r2, r3 })
    }

    pub fn rows(&self) -> [u32; 3] {
        [self.r1, self.r2, self.r3]
    }

    pub fn n(&self) -> u32 {
        self.r1 + self.r2 + self.r3
    }

    /// Vertex reached by any growth history of this shape: `(r2 - r3, r1 - r2)`.
    pub fn endpoint(&self) -> Vertex {
        Vertex::new(self.r2 - self.r3, self.r1 - self.r2)
    }

    /// The unique shape with `n` boxes ending at `v`, if any.
    ///
    /// Requires `n ≡ 2i + j (mod 3)` and `r3 = (n - 2i - j) / 3 >= 0`.
    pub fn from_endpoint(n: u32, v: Vertex) -> Option<Self> {
        let offset = 2 * u64::from(v.i) + u64::from(v.j);
        let n = u64::from(n);
        if offset > n || (n - offset) % 3 != 0 {
            return None;
        }
        let r3 = (n - offset) / 3;
        let r2 = r3 + u64::from(v.i);
        let r1 = r2 + u64::from(v.j);
        Some(Shape3 {
            r1: r1 as u32,
            r2: r2 as u32,
            r3: r3 as u32,
        })
    }

    /// All three-row shapes with exactly `n` boxes.
    pub fn all_with_boxes(n: u32) -> impl Iterator<Item = Shape3> {
        (0..=n / 3).flat_map(move |r3| {
            (r3..=(n - r3) / 2).map(move |r2| Shape3 {
                r1: n - r2 - r3,
                r2,
                r3,
            })
        })
    }
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, x| acc * x)
}

/// Hook-length count for a three-row shape:
/// `n! (r1-r2+1)(r2-r3+1)(r1-r3+2) / ((r1+2)! (r2+1)! r3!)`.
pub fn hook_count(shape: &Shape3) -> BigUint {
    let [r1, r2, r3] = shape.rows().map(u64::from);
    let numer = factorial(r1 + r2 + r3) * ((r1 - r2 + 1) * (r2 - r3 + 1) * (r1 - r3 + 2));
    let denom = factorial(r1 + 2) * factorial(r2 + 1) * factorial(r3);
    debug_assert!((&numer % &denom).is_zero());
    numer / denom
}

/// Count fillings by adding boxes one at a time while keeping the rows weakly
/// decreasing. Refuses shapes with more than 18 boxes.
pub fn brute_force_count(shape: &Shape3) -> Result<BigUint> {
    brute_force_count_with_cap(shape, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_count_with_cap(shape: &Shape3, cap: u32) -> Result<BigUint> {
    if shape.n() > cap {
        return Err(Error::CapExceeded { n: shape.n(), cap });
    }
    fn grow(rows: [u32; 3], target: [u32; 3]) -> u64 {
        if rows == target {
            return 1;
        }
        let mut total = 0;
        for r in 0..3 {
            let fits = rows[r] < target[r] && (r == 0 || rows[r] < rows[r - 1]);
            if fits {
                let mut next = rows;
                next[r] += 1;
                total += grow(next, target);
            }
        }
        total
    }
    Ok(BigUint::from(grow([0, 0, 0], shape.rows())))
}

/// Number of walks of length `n` from the origin to `v` when the level cap
/// does not bind (`k >= n`).
pub fn unrestricted_count(n: u32, v: Vertex) -> BigUint {
    Shape3::from_endpoint(n, v)
        .map(|s| hook_count(&s))
        .unwrap_or_default()
}

/// The closed form as printed alongside the unrestricted case:
///
/// ```text
/// (i+1)(j+2)(j-i+1) n! / ( ((n-i+2j+6)/3)! ((n+2i-j+3)/3)! ((n-i-j)/3)! )
/// ```
///
/// together with its side condition that the count is zero unless every
/// factorial argument is a nonnegative integer. Kept only to audit it against
/// [`unrestricted_count`]; the value may be negative or fractional.
pub fn printed_closed_form(n: u32, v: Vertex) -> BigRational {
    let (n, i, j) = (i64::from(n), i64::from(v.i), i64::from(v.j));
    let arg = |x: i64| (x >= 0 && x % 3 == 0).then_some((x / 3) as u64);
    let (Some(a), Some(b), Some(c)) = (
        arg(n - i + 2 * j + 6),
        arg(n + 2 * i - j + 3),
        arg(n - i - j),
    ) else {
        return BigRational::zero();
    };
    let numer = BigInt::from((i + 1) * (j + 2) * (j - i + 1)) * BigInt::from(factorial(n as u64));
    let denom = BigInt::from(factorial(a) * factorial(b) * factorial(c));
    BigRational::new(numer, denom)
}

/// One row of the closed-form audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub n: u32,
    pub vertex: Vertex,
    pub shape: Shape3,
    pub hook: BigUint,
    pub printed: BigRational,
}

impl AuditEntry {
    pub fn agrees(&self) -> bool {
        self.printed == BigRational::from_integer(BigInt::from(self.hook.clone()))
    }
}

/// Compare the printed closed form with the hook-length count at every
/// vertex reachable in `n <= max_n` steps, optionally restricted to one vertex.
pub fn audit_printed_formula(max_n: u32, only: Option<Vertex>) -> Vec<AuditEntry> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for shape in Shape3::all_with_boxes(n) {
            let vertex = shape.endpoint();
            if only.is_some_and(|v| v != vertex) {
                continue;
            }
            out.push(AuditEntry {
                n,
                vertex,
                shape,
                hook: hook_count(&shape),
                printed: printed_closed_form(n, vertex),
            });
        }
    }
    out
}

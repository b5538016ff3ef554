//! The linear system `F_k x = e_1` for the generating functions
//! `F_{i,j}(t; k) = sum_n f_{i,j}(n, k) t^n`.
//!
//! `F_k` is block tridiagonal over `Z[t]`. Block row `b` (vertices with
//! `i = b`, size `p = k + 1 - b`) holds `A_p` on the diagonal, `E_p` to the
//! right and `E'_p` to the left, where
//!
//! ```text
//! A_p  = J_{p,p;0} - t J_{p,p;-1}
//! E_p  = -t J_{p,p-1;0}
//! E'_p = -t J_{p,p+1;1}
//! ```
//!
//! and `J_{p,q;s}` is the `p x q` 0/1 matrix with ones where `col - row = s`.
//! The system is solved by fraction-free (Bareiss) elimination, whose last
//! pivot is `det F_k`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{self, Lattice, Vertex};
use crate::poly::{IntPoly, RationalFn};

/// Dense rectangular matrix of integer polynomials, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: alloc::vec![IntPoly::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for d in 0..dim {
            m.set(d, d, IntPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        Ok(PolyMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: IntPoly) {
        self.entries[row * self.cols + col] = value;
    }

    /// Copy `block` into `self` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &PolyMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(row + r, col + c, block.get(r, c).clone());
            }
        }
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.get(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(m, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entries where `self` is nonzero, as `(row, col)` pairs.
    pub fn nonzero_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(idx, _)| (idx / self.cols, idx % self.cols))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// `J_{p,q;s}`: ones where `col - row = s` (1-based, which is the same
/// difference as 0-based).
pub fn j_matrix(p: usize, q: usize, s: i64) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(p, q);
    for r in 0..p {
        let c = r as i64 + s;
        if (0..q as i64).contains(&c) {
            m.set(r, c as usize, IntPoly::one());
        }
    }
    m
}

fn minus_t_times(m: &PolyMatrix) -> PolyMatrix {
    m.scale(&IntPoly::monomial(-1, 1))
}

/// `A_p = J_{p,p;0} - t J_{p,p;-1}`.
pub fn a_block(p: usize) -> PolyMatrix {
    let band = minus_t_times(&j_matrix(p, p, -1));
    let mut m = j_matrix(p, p, 0);
    for (r, c) in band.nonzero_positions().collect::<Vec<_>>() {
        m.set(r, c, m.get(r, c) + band.get(r, c));
    }
    m
}

/// `E_p = -t J_{p,p-1;0}`.
pub fn e_block(p: usize) -> PolyMatrix {
    minus_t_times(&j_matrix(p, p - 1, 0))
}

/// `E'_p = -t J_{p,p+1;1}`.
pub fn e_prime_block(p: usize) -> PolyMatrix {
    minus_t_times(&j_matrix(p, p + 1, 1))
}

/// The system matrix `F_k`, rows and columns in canonical vertex order.
pub fn build_system(k: u32) -> Result<PolyMatrix> {
    if k == 0 {
        return Err(Error::InvalidLevel(k));
    }
    let dim = lattice::vertex_count(k);
    let ku = k as usize;
    // the inhomogeneous term sits in the row of the origin
    assert_eq!(lattice::index_of(Vertex::ORIGIN, k), Some(0));

    let mut m = PolyMatrix::zeros(dim, dim);
    let mut offsets = Vec::with_capacity(ku + 2);
    let mut acc = 0;
    for b in 0..=ku {
        offsets.push(acc);
        acc += ku + 1 - b;
    }
    for b in 0..=ku {
        let p = ku + 1 - b;
        let row = offsets[b];
        m.set_block(row, row, &a_block(p));
        if b < ku {
            m.set_block(row, offsets[b + 1], &e_block(p));
        }
        if b > 0 {
            m.set_block(row, offsets[b - 1], &e_prime_block(p));
        }
    }
    Ok(m)
}

/// Fraction-free elimination of a square system, optionally with extra
/// right-hand-side columns. Returns the echelon form and the determinant
/// including the sign of any row swaps.
fn bareiss(mut m: PolyMatrix) -> Result<(PolyMatrix, IntPoly)> {
    let n = m.rows;
    if m.cols < n {
        return Err(Error::DimensionMismatch);
    }
    let mut prev = IntPoly::one();
    let mut negate = false;
    for p in 0..n {
        let Some(pivot_row) = (p..n).find(|&r| !m.get(r, p).is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        if pivot_row != p {
            m.swap_rows(p, pivot_row);
            negate = !negate;
        }
        let pivot = m.get(p, p).clone();
        for r in p + 1..n {
            let factor = m.get(r, p).clone();
            for c in p + 1..m.cols {
                let upper = m.get(p, c);
                let here = m.get(r, c);
                let numer = if factor.is_zero() || upper.is_zero() {
                    if here.is_zero() {
                        continue;
                    }
                    here * &pivot
                } else {
                    &(here * &pivot) - &(&factor * upper)
                };
                let value = if prev.is_one() {
                    numer
                } else {
                    numer.div_exact(&prev).expect("Bareiss step divides exactly")
                };
                m.set(r, c, value);
            }
            m.set(r, p, IntPoly::zero());
        }
        prev = pivot;
    }
    let det = if negate { -prev } else { prev };
    Ok((m, det))
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn determinant(m: &PolyMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch);
    }
    if m.rows == 0 {
        return Ok(IntPoly::one());
    }
    match bareiss(m.clone()) {
        Ok((_, det)) => Ok(det),
        Err(Error::SingularMatrix) => Ok(IntPoly::zero()),
        Err(e) => Err(e),
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.constant_term().is_negative() {
        -p
    } else {
        p
    }
}

/// `det F_k` with constant term `+1`.
pub fn system_det(k: u32) -> Result<IntPoly> {
    determinant(&build_system(k)?).map(normalize_sign)
}

/// Every `F_{i,j}(t; k)` together with `det F_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenFnSolution {
    k: u32,
    vertices: Vec<Vertex>,
    solutions: Vec<RationalFn>,
    determinant: IntPoly,
}

impl GenFnSolution {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, v: Vertex) -> Option<&RationalFn> {
        lattice::index_of(v, self.k).map(|idx| &self.solutions[idx])
    }

    /// `(vertex, F_v)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &RationalFn)> {
        self.vertices.iter().copied().zip(self.solutions.iter())
    }

    pub fn determinant(&self) -> &IntPoly {
        &self.determinant
    }
}

/// Solve `F_k x = (1, 0, ..., 0)^T` exactly.
pub fn solve_system(k: u32) -> Result<GenFnSolution> {
    let system = build_system(k)?;
    let n = system.rows();
    let mut augmented = PolyMatrix::zeros(n, n + 1);
    augmented.set_block(0, 0, &system);
    augmented.set(0, n, IntPoly::one());

    let (echelon, det) = bareiss(augmented)?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    // Cramer numerators y = D x with D the last pivot; every y_r is in Z[t],
    // so each back-substitution division is exact.
    let last_pivot = echelon.get(n - 1, n - 1).clone();
    let mut numer: Vec<IntPoly> = alloc::vec![IntPoly::zero(); n];
    for r in (0..n).rev() {
        let mut acc = echelon.get(r, n) * &last_pivot;
        for (c, y) in numer.iter().enumerate().skip(r + 1) {
            let a = echelon.get(r, c);
            if !a.is_zero() && !y.is_zero() {
                acc = &acc - &(a * y);
            }
        }
        numer[r] = acc
            .div_exact(echelon.get(r, r))
            .expect("back substitution divides exactly");
    }

    let solutions = numer
        .into_iter()
        .map(|y| RationalFn::new(y, last_pivot.clone()))
        .collect::<Result<Vec<_>>>()?;
    let vertices = Lattice::new(k)?.vertices().to_vec();
    Ok(GenFnSolution {
        k,
        vertices,
        solutions,
        determinant: normalize_sign(det),
    })
}

/// `d_k`, the degree of `det F_k`: with `k = 3m - 1, 3m, 3m + 1` it is
/// `3m(3m+1)/2`, `9m(m+1)/2`, `3(m+1)(3m+2)/2` respectively.
pub fn det_degree(k: u32) -> u64 {
    let k = u64::from(k);
    match k % 3 {
        2 => {
            let m = (k + 1) / 3;
            3 * m * (3 * m + 1) / 2
        }
        0 => {
            let m = k / 3;
            9 * m * (m + 1) / 2
        }
        _ => {
            let m = (k - 1) / 3;
            3 * (m + 1) * (3 * m + 2) / 2
        }
    }
}

/// Coefficient of `t^3` in `det F_k` predicted by `1 - k^2 t^3 + O(t^6)`.
pub fn det_cubic_coeff(k: u32) -> BigInt {
    -BigInt::from(u64::from(k) * u64::from(k))
}

impl GenFnSolution {
    /// Whether every denominator divides the determinant.
    pub fn denominators_divide_det(&self) -> bool {
        self.solutions
            .iter()
            .all(|f| self.determinant.div_exact(f.den()).is_some())
    }
}

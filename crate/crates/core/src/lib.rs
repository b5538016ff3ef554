//! Exact enumeration of SU(3)_k fusion-space dimensions.
//!
//! The fusion graph `D_k` has one vertex per pair of row-length differences
//! `(i, j)` of a three-row Young diagram with `i + j <= k`. Walks of length
//! `n` from the origin count the `k`-restricted standard Young tableaux, and
//! hence the degeneracy `f_{i,j}(n, k)` of the corresponding invariant
//! subspace of `n` anyons.
//!
//! The crate is `no_std` and only needs `alloc`:
//!
//! - [`lattice`]: vertices, edges and adjacency of `D_k`.
//! - [`pathcount`]: big-integer walk counts by dynamic programming.
//! - [`poly`]: integer polynomials and reduced rational functions.
//! - [`genfunc`]: the block system `F_k`, its determinant and exact solution.
//! - [`spectral`]: the total quantum dimension computed three ways.
//! - [`syt`]: hook-length and brute-force tableau counts.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod genfunc;
pub mod lattice;
pub mod pathcount;
pub mod poly;
pub mod spectral;
pub mod syt;

pub use error::{Error, Result};
pub use genfunc::{build_system, solve_system, system_det, GenFnSolution, PolyMatrix};
pub use lattice::{AdjMatrix, Lattice, Vertex};
pub use pathcount::{count_paths, degeneracy, total_dimension, CountTable};
pub use poly::{poly_gcd, IntPoly, RationalFn};
pub use spectral::{lambda_perron, lambda_trig, smallest_positive_root, spectral_report, SpectralReport};
pub use syt::{brute_force_count, hook_count, unrestricted_count, Shape3};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

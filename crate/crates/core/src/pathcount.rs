//! Exact walk counts on `D_k` from the origin.
//!
//! `f_{i,j}(n, k)` obeys `f_{i,j}(n) = f_{i+1,j}(n-1) + f_{i-1,j+1}(n-1) +
//! f_{i,j-1}(n-1)` with out-of-range terms zero. One round of the recurrence
//! costs at most three big-integer additions per vertex.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Vertex};

/// Counts of `n`-step walks from the origin to every vertex of `V_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    k: u32,
    n: u32,
    vertices: Vec<Vertex>,
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, v: Vertex) -> Option<&BigUint> {
        crate::lattice::index_of(v, self.k).map(|idx| &self.counts[idx])
    }

    /// Counts in canonical vertex order.
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, &BigUint)> {
        self.vertices.iter().copied().zip(self.counts.iter())
    }

    /// Total number of `n`-step walks leaving the origin.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Successive count vectors `n = 0, 1, 2, ...` for one level.
#[derive(Debug, Clone)]
pub struct WalkCounts {
    lattice: Lattice,
    n: u32,
    current: Vec<BigUint>,
}

impl WalkCounts {
    pub fn new(k: u32) -> Result<Self> {
        let lattice = Lattice::new(k)?;
        let mut current = alloc::vec![BigUint::zero(); lattice.len()];
        current[0] = BigUint::one();
        Ok(WalkCounts {
            lattice,
            n: 0,
            current,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Number of steps taken so far.
    pub fn steps(&self) -> u32 {
        self.n
    }

    pub fn current(&self) -> &[BigUint] {
        &self.current
    }

    pub fn step(&mut self) {
        let next = (0..self.lattice.len())
            .map(|v| {
                self.lattice
                    .predecessors(v)
                    .iter()
                    .fold(BigUint::zero(), |acc, &u| acc + &self.current[u])
            })
            .collect();
        self.current = next;
        self.n += 1;
    }

    pub fn advance_to(&mut self, n: u32) {
        while self.n < n {
            self.step();
        }
    }

    pub fn snapshot(&self) -> CountTable {
        CountTable {
            k: self.lattice.k(),
            n: self.n,
            vertices: self.lattice.vertices().to_vec(),
            counts: self.current.clone(),
        }
    }

    pub fn into_table(self) -> CountTable {
        CountTable {
            k: self.lattice.k(),
            n: self.n,
            vertices: self.lattice.vertices().to_vec(),
            counts: self.current,
        }
    }
}

pub fn count_paths(k: u32, n: u32) -> Result<CountTable> {
    let mut walk = WalkCounts::new(k)?;
    walk.advance_to(n);
    Ok(walk.into_table())
}

/// `f_{i,j}(n, k)`.
pub fn degeneracy(k: u32, n: u32, v: Vertex) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidLevel(k));
    }
    if !v.in_level(k) {
        return Err(Error::VertexOutOfRange { vertex: v, k });
    }
    if v.residue() != n % 3 {
        return Ok(BigUint::zero());
    }
    let table = count_paths(k, n)?;
    Ok(table.get(v).cloned().unwrap_or_default())
}

/// `sum_{i,j} f_{i,j}(n, k)`.
pub fn total_dimension(k: u32, n: u32) -> Result<BigUint> {
    Ok(count_paths(k, n)?.total())
}

/// Grid of `f_v(n, k)` for `k = 1..=k_max` (rows) and `n = 0..=n_max` (columns).
///
/// Rows where `v` lies outside `V_k` are all zero.
pub fn table(k_max: u32, n_max: u32, v: Vertex) -> Result<Vec<Vec<BigUint>>> {
    (1..=k_max).map(|k| table_row(k, n_max, v)).collect()
}

/// One row of [`table`].
pub fn table_row(k: u32, n_max: u32, v: Vertex) -> Result<Vec<BigUint>> {
    let mut walk = WalkCounts::new(k)?;
    let Some(idx) = walk.lattice().index_of(v) else {
        return Ok(alloc::vec![BigUint::zero(); n_max as usize + 1]);
    };
    let mut row = Vec::with_capacity(n_max as usize + 1);
    row.push(walk.current()[idx].clone());
    for _ in 0..n_max {
        walk.step();
        row.push(walk.current()[idx].clone());
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn golden_cells() {
        assert_eq!(count_paths(3, 9).unwrap().get(Vertex::ORIGIN), Some(&big(42)));
        assert_eq!(count_paths(2, 15).unwrap().get(Vertex::ORIGIN), Some(&big(377)));
        assert_eq!(
            count_paths(8, 27).unwrap().get(Vertex::ORIGIN),
            Some(&big(413180625))
        );
        assert_eq!(degeneracy(4, 12, Vertex::ORIGIN).unwrap(), big(462));
    }

    #[test]
    fn empty_walk() {
        let t = count_paths(5, 0).unwrap();
        for (v, c) in t.iter() {
            assert_eq!(*c, big(u64::from(v == Vertex::ORIGIN)));
        }
    }

    #[test]
    fn level_one_walks_around_the_cycle() {
        let t = count_paths(1, 4).unwrap();
        for (v, c) in t.iter() {
            assert_eq!(*c, big(u64::from(v == Vertex::new(0, 1))), "{v}");
        }
        assert_eq!(total_dimension(1, 0).unwrap(), big(1));
        assert_eq!(total_dimension(1, 5).unwrap(), big(1));
    }

    #[test]
    fn small_degeneracies() {
        assert_eq!(degeneracy(2, 1, Vertex::new(0, 1)).unwrap(), big(1));
        assert_eq!(degeneracy(2, 2, Vertex::ORIGIN).unwrap(), big(0));
    }

    #[test]
    fn errors() {
        assert_eq!(count_paths(0, 3).unwrap_err(), Error::InvalidLevel(0));
        assert_eq!(
            degeneracy(2, 3, Vertex::new(2, 1)).unwrap_err(),
            Error::VertexOutOfRange {
                vertex: Vertex::new(2, 1),
                k: 2
            }
        );
    }

    #[test]
    fn table_rows_agree_with_count_paths() {
        let v = Vertex::new(1, 1);
        let grid = table(3, 9, v).unwrap();
        assert_eq!(grid.len(), 3);
        assert!(grid[0].iter().all(Zero::is_zero));
        for (row, k) in grid.iter().zip(1..) {
            for (n, c) in row.iter().enumerate() {
                let expect = count_paths(k, n as u32)
                    .unwrap()
                    .get(v)
                    .cloned()
                    .unwrap_or_default();
                assert_eq!(*c, expect);
            }
        }
    }

    #[test]
    fn congruence_and_saturation() {
        for k in 1..=7u32 {
            for n in 0..=14u32 {
                let here = count_paths(k, n).unwrap();
                let above = count_paths(k + 1, n).unwrap();
                for (v, c) in here.iter() {
                    if v.residue() != n % 3 {
                        assert!(c.is_zero());
                    }
                    let up = above.get(v).unwrap();
                    assert!(c <= up);
                    if k >= n {
                        assert_eq!(c, up);
                    }
                }
            }
        }
    }
}

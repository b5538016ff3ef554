//! The fusion graph `D_k`.
//!
//! A vertex `(i, j)` records the row-length differences of a three-row Young
//! diagram: `j = r1 - r2` and `i = r2 - r3`. Adding a box to the first,
//! second or third row moves `(a, b)` to `(a, b + 1)`, `(a + 1, b - 1)` or
//! `(a - 1, b)` respectively. The level `k` caps `i + j = r1 - r3`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: u32,
    pub j: u32,
}

impl Vertex {
    pub const ORIGIN: Vertex = Vertex { i: 0, j: 0 };

    pub const fn new(i: u32, j: u32) -> Self {
        Vertex { i, j }
    }

    /// Membership in `V_k`.
    pub fn in_level(self, k: u32) -> bool {
        u64::from(self.i) + u64::from(self.j) <= u64::from(k)
    }

    /// `(2i + j) mod 3`; every edge raises it by one.
    pub fn residue(self) -> u32 {
        ((2 * u64::from(self.i) + u64::from(self.j)) % 3) as u32
    }

    /// Candidate successors before the level cap is applied.
    fn raw_successors(self) -> impl Iterator<Item = Vertex> {
        let Vertex { i, j } = self;
        [
            Some(Vertex::new(i, j + 1)),
            i.checked_sub(1).map(|i| Vertex::new(i, j)),
            j.checked_sub(1).map(|j| Vertex::new(i + 1, j)),
        ]
        .into_iter()
        .flatten()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl From<(u32, u32)> for Vertex {
    fn from((i, j): (u32, u32)) -> Self {
        Vertex::new(i, j)
    }
}

/// Whether `(from, to)` is an edge of `D_k`.
///
/// With `from = (a, b)` and `to = (c, d)` the edge exists iff both endpoints
/// lie in `V_k` and `to` is one of `(a, b + 1)`, `(a - 1, b)`, `(a + 1, b - 1)`.
pub fn is_edge(from: Vertex, to: Vertex, k: u32) -> bool {
    if !from.in_level(k) || !to.in_level(k) {
        return false;
    }
    let (a, b, c, d) = (
        i64::from(from.i),
        i64::from(from.j),
        i64::from(to.i),
        i64::from(to.j),
    );
    (a == c && d == b + 1) || (b == d && c == a - 1) || (c == a + 1 && d == b - 1)
}

/// `|V_k| = (k + 1)(k + 2) / 2`.
pub fn vertex_count(k: u32) -> usize {
    let k = k as usize;
    (k + 1) * (k + 2) / 2
}

/// Zero-based position of `v` in the canonical order, `i(2k - i + 3)/2 + j`.
///
/// The canonical order lists `(0,0), (0,1), ..., (0,k), (1,0), ..., (k,0)`.
pub fn index_of(v: Vertex, k: u32) -> Option<usize> {
    if !v.in_level(k) {
        return None;
    }
    let (i, j, k) = (v.i as usize, v.j as usize, k as usize);
    Some(i * (2 * k - i + 3) / 2 + j)
}

/// Vertex set and edge set of `D_k`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    k: u32,
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
}

impl Lattice {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidLevel(k));
        }
        let vertices: Vec<Vertex> = (0..=k)
            .flat_map(|i| (0..=k - i).map(move |j| Vertex::new(i, j)))
            .collect();
        let mut successors = alloc::vec![Vec::new(); vertices.len()];
        let mut predecessors = alloc::vec![Vec::new(); vertices.len()];
        let mut edges = Vec::new();
        for (from_idx, &from) in vertices.iter().enumerate() {
            let mut targets: Vec<usize> = from
                .raw_successors()
                .filter(|&to| is_edge(from, to, k))
                .filter_map(|to| index_of(to, k))
                .collect();
            targets.sort_unstable();
            for &to_idx in &targets {
                edges.push((from, vertices[to_idx]));
                predecessors[to_idx].push(from_idx);
            }
            successors[from_idx] = targets;
        }
        Ok(Lattice {
            k,
            vertices,
            edges,
            successors,
            predecessors,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Vertices in canonical order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges ordered by source index, then target index.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        index_of(v, self.k)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.in_level(self.k)
    }

    /// Indices of the successors of the vertex at `idx`.
    pub fn successors(&self, idx: usize) -> &[usize] {
        &self.successors[idx]
    }

    /// Indices of the predecessors of the vertex at `idx`.
    pub fn predecessors(&self, idx: usize) -> &[usize] {
        &self.predecessors[idx]
    }

    pub fn adjacency(&self) -> AdjMatrix {
        let dim = self.len();
        let mut entries = alloc::vec![0u8; dim * dim];
        for (r, succ) in self.successors.iter().enumerate() {
            for &c in succ {
                entries[r * dim + c] = 1;
            }
        }
        AdjMatrix { dim, entries }
    }
}

/// Dense 0/1 adjacency matrix in canonical vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjMatrix {
    dim: usize,
    entries: Vec<u8>,
}

impl AdjMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[u8] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn row_sum(&self, row: usize) -> u32 {
        self.row(row).iter().map(|&e| u32::from(e)).sum()
    }
}

//! Labeled simple graphs and the structural predicates used throughout the crate.
//!
//! Vertices are `0..n` in the API; the text and DOT formats in [`io`] shift
//! them to `1..=n`.

mod hamilton;
pub mod io;
mod iso;
pub mod named;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

pub use hamilton::{hamiltonian_cycle, HamiltonVerdict};
pub use iso::{contains_induced, find_induced, find_isomorphism, is_isomorphic};
pub use named::{make_named, NamedGraph};

/// Simple undirected graph stored as a dense bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl LabeledGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        LabeledGraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = LabeledGraph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::GraphFormat(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::GraphFormat(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> LabeledGraph {
        let mut h = LabeledGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> LabeledGraph {
        let mut h = LabeledGraph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    pub fn complement(&self) -> LabeledGraph {
        let mut h = LabeledGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        h
    }

    /// Cartesian product; vertex `(u, v)` becomes `u * other.n() + v`.
    pub fn cartesian_product(&self, other: &LabeledGraph) -> LabeledGraph {
        let (n1, n2) = (self.n, other.n);
        let mut h = LabeledGraph::new(n1 * n2);
        for u in 0..n1 {
            for (v, x) in other.edges() {
                h.add_edge(u * n2 + v, u * n2 + x);
            }
        }
        for (u, w) in self.edges() {
            for v in 0..n2 {
                h.add_edge(u * n2 + v, w * n2 + v);
            }
        }
        h
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        degree_sequence_of(self)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Vertex sets of connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// A proper 2-colouring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Some triangle `(u, v, w)` with `u < v < w`, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (u, v) in self.edges() {
            let (ru, rv) = (self.row(u), self.row(v));
            for (wi, (a, b)) in ru.iter().zip(rv).enumerate() {
                let common = a & b;
                if common != 0 {
                    let w = wi * 64 + common.trailing_zeros() as usize;
                    let mut t = [u, v, w];
                    t.sort_unstable();
                    return Some((t[0], t[1], t[2]));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// True iff the graph is isomorphic to the hypercube `Q_m` with `2^m = n`.
    pub fn is_hypercube(&self) -> bool {
        if self.n == 0 || !self.n.is_power_of_two() {
            return false;
        }
        let m = self.n.trailing_zeros() as usize;
        if self.regular_degree() != Some(m) || !self.is_connected() || !self.is_bipartite() {
            return false;
        }
        is_isomorphic(self, &named::hypercube(m))
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

pub fn degree_sequence_of(g: &LabeledGraph) -> DegreeSequence {
    DegreeSequence::new(g.degrees()).unwrap_or_else(|_| {
        // only the zero-vertex graph lands here
        DegreeSequence::new(vec![0]).expect("single zero is valid")
    })
}

/// Disjoint union; vertices of `b` follow those of `a`.
pub fn disjoint_union(a: &LabeledGraph, b: &LabeledGraph) -> LabeledGraph {
    let mut h = LabeledGraph::new(a.n() + b.n());
    for (u, v) in a.edges() {
        h.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        h.add_edge(a.n() + u, a.n() + v);
    }
    h
}

/// Cartesian product of a list of factors, folded left to right.
pub fn cartesian_product_all<'a>(factors: impl IntoIterator<Item = &'a LabeledGraph>) -> LabeledGraph {
    factors
        .into_iter()
        .fold(LabeledGraph::new(1), |acc, g| acc.cartesian_product(g))
}

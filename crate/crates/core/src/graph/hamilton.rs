use serde::{Deserialize, Serialize};

use super::LabeledGraph;

/// Outcome of a Hamiltonian-cycle search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "cycle")]
pub enum HamiltonVerdict {
    /// Vertices of a Hamiltonian cycle, starting at vertex 0.
    Cycle(Vec<usize>),
    /// `K_1` or `K_2`, which count as Hamiltonian by convention.
    Exempt,
    NoCycle,
    /// The node budget ran out before the search finished.
    Unknown,
}

impl HamiltonVerdict {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, HamiltonVerdict::Cycle(_) | HamiltonVerdict::Exempt)
    }
}

/// Backtracking search from vertex 0 with forced-move and connectivity pruning.
/// `budget` bounds the number of search nodes expanded.
pub fn hamiltonian_cycle(g: &LabeledGraph, budget: u64) -> HamiltonVerdict {
    let n = g.n();
    match n {
        0 => return HamiltonVerdict::NoCycle,
        1 => return HamiltonVerdict::Exempt,
        2 if g.has_edge(0, 1) => return HamiltonVerdict::Exempt,
        2 => return HamiltonVerdict::NoCycle,
        _ => {}
    }
    if (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        return HamiltonVerdict::NoCycle;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut search = Search {
        g,
        adj,
        visited: vec![false; n],
        path: Vec::with_capacity(n),
        budget,
        expansions: 0,
        exhausted: false,
    };
    search.visited[0] = true;
    search.path.push(0);
    if search.extend() {
        HamiltonVerdict::Cycle(search.path)
    } else if search.exhausted {
        HamiltonVerdict::Unknown
    } else {
        HamiltonVerdict::NoCycle
    }
}

struct Search<'a> {
    g: &'a LabeledGraph,
    adj: Vec<Vec<usize>>,
    visited: Vec<bool>,
    path: Vec<usize>,
    budget: u64,
    expansions: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        self.expansions += 1;
        if self.expansions > self.budget {
            self.exhausted = true;
            return false;
        }
        let n = self.g.n();
        let start = self.path[0];
        let end = *self.path.last().expect("path is never empty");
        if self.path.len() == n {
            return self.g.has_edge(end, start);
        }

        // every unvisited vertex still needs two usable cycle neighbours
        let mut avail = vec![0usize; n];
        let mut forced = None;
        for u in (0..n).filter(|&u| !self.visited[u]) {
            let count = self.adj[u]
                .iter()
                .filter(|&&w| !self.visited[w] || w == end || w == start)
                .count();
            if count < 2 {
                return false;
            }
            avail[u] = count;
            if count == 2 && self.path.len() >= 2 && self.g.has_edge(u, end) {
                if forced.is_some() {
                    return false;
                }
                forced = Some(u);
            }
        }
        if self.path.len() >= 2 && !self.adj[start].iter().any(|&w| !self.visited[w]) {
            return false;
        }
        if !self.remainder_connected(end) {
            return false;
        }

        let candidates: Vec<usize> = match forced {
            Some(u) => vec![u],
            None => {
                let mut c: Vec<usize> = self.adj[end].iter().copied().filter(|&w| !self.visited[w]).collect();
                c.sort_by_key(|&w| (avail[w], w));
                c
            }
        };
        for next in candidates {
            self.visited[next] = true;
            self.path.push(next);
            if self.extend() {
                return true;
            }
            self.path.pop();
            self.visited[next] = false;
            if self.exhausted {
                return false;
            }
        }
        false
    }

    /// The unvisited vertices together with the path end induce a connected graph.
    fn remainder_connected(&self, end: usize) -> bool {
        let n = self.g.n();
        let remaining = self.visited.iter().filter(|&&v| !v).count();
        let mut seen = vec![false; n];
        seen[end] = true;
        let mut stack = vec![end];
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !self.visited[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }
}

//! Labeled realizations of degree sequences, 2-switches between them, and the
//! realization graph whose edges are single 2-switches.

use std::collections::HashMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{io, LabeledGraph};
use crate::limits::{Limits, MAX_SUPPORTED_N};
use crate::sequence::{is_graphical, is_graphical_terms, DegreeSequence, SplittedSequence};

/// Edge set of a graph on at most [`MAX_SUPPORTED_N`] vertices, one bit per
/// vertex pair in lexicographic pair order.
type EdgeMask = u128;

#[inline]
fn pair_bit(n: usize, i: usize, j: usize) -> EdgeMask {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1 << (i * n - i * (i + 1) / 2 + (j - i - 1))
}

fn mask_edges(n: usize, mask: EdgeMask) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                out.push((i, j));
            }
            bit += 1;
        }
    }
    out
}

fn mask_to_graph(n: usize, mask: EdgeMask) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for (u, v) in mask_edges(n, mask) {
        g.add_edge(u, v);
    }
    g
}

fn graph_to_mask(g: &LabeledGraph) -> EdgeMask {
    g.edges().fold(0, |m, (u, v)| m | pair_bit(g.n(), u, v))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairRule {
    Free,
    Required,
    Forbidden,
}

/// Depth-first enumeration of all graphs on `0..n` where vertex `i` has degree
/// `degrees[i]`. Vertex `i` picks its later neighbours in lexicographic order
/// with edges tried before non-edges, so graphs come out in lexicographic
/// order of their sorted edge lists. After each vertex is finished the
/// residual degrees of the later vertices must pass Erdős–Gallai.
struct Enumerator<'a, R, S> {
    n: usize,
    residual: Vec<usize>,
    edges: Vec<(usize, usize)>,
    rule: R,
    sink: &'a mut S,
}

impl<R, S> Enumerator<'_, R, S>
where
    R: Fn(usize, usize) -> PairRule,
    S: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
{
    fn vertex(&mut self, i: usize) -> ControlFlow<()> {
        if i == self.n {
            return (self.sink)(&self.edges);
        }
        let mut candidates = Vec::new();
        let mut required = 0;
        for j in i + 1..self.n {
            match (self.rule)(i, j) {
                PairRule::Forbidden => {}
                PairRule::Required if self.residual[j] == 0 => return ControlFlow::Continue(()),
                PairRule::Required => {
                    required += 1;
                    candidates.push((j, true));
                }
                PairRule::Free if self.residual[j] > 0 => candidates.push((j, false)),
                PairRule::Free => {}
            }
        }
        let need = self.residual[i];
        if need < required || need > candidates.len() {
            return ControlFlow::Continue(());
        }
        self.choose(i, &candidates, 0, need)
    }

    fn choose(&mut self, i: usize, candidates: &[(usize, bool)], pos: usize, need: usize) -> ControlFlow<()> {
        if need == 0 {
            if candidates[pos..].iter().any(|&(_, req)| req) {
                return ControlFlow::Continue(());
            }
            let saved = self.residual[i];
            self.residual[i] = 0;
            let flow = if is_graphical_terms(&self.residual[i + 1..]) {
                self.vertex(i + 1)
            } else {
                ControlFlow::Continue(())
            };
            self.residual[i] = saved;
            return flow;
        }
        if candidates.len() - pos < need {
            return ControlFlow::Continue(());
        }
        let (j, req) = candidates[pos];
        self.residual[j] -= 1;
        self.edges.push((i, j));
        let flow = self.choose(i, candidates, pos + 1, need - 1);
        self.edges.pop();
        self.residual[j] += 1;
        flow?;
        if !req {
            self.choose(i, candidates, pos + 1, need)?;
        }
        ControlFlow::Continue(())
    }
}

fn enumerate_with<R, S>(degrees: &[usize], rule: R, sink: &mut S)
where
    R: Fn(usize, usize) -> PairRule,
    S: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
{
    let mut e = Enumerator {
        n: degrees.len(),
        residual: degrees.to_vec(),
        edges: Vec::new(),
        rule,
        sink,
    };
    let _ = e.vertex(0);
}

fn check_size(n: usize, limits: &Limits) -> Result<()> {
    let limit = limits.max_n.min(MAX_SUPPORTED_N);
    if n > limit {
        return Err(Error::BoundExceeded {
            what: "sequence length",
            limit,
            reached: n,
        });
    }
    Ok(())
}

fn enumerate_masks(d: &DegreeSequence, limits: &Limits) -> Result<Vec<EdgeMask>> {
    if !is_graphical(d) {
        return Err(Error::NotGraphical(d.to_string()));
    }
    let n = d.len();
    check_size(n, limits)?;
    let cap = limits.max_realizations;
    let mut out = Vec::new();
    let mut overflow = false;
    enumerate_with(d.terms(), |_, _| PairRule::Free, &mut |edges: &[(usize, usize)]| {
        if out.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(edges.iter().fold(0, |m, &(u, v)| m | pair_bit(n, u, v)));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::BoundExceeded {
            what: "realization count",
            limit: cap,
            reached: out.len() + 1,
        });
    }
    Ok(out)
}

/// Every labeled realization of `d`, in lexicographic order of edge sets.
pub fn enumerate_realizations(d: &DegreeSequence, limits: &Limits) -> Result<Vec<LabeledGraph>> {
    Ok(enumerate_masks(d, limits)?
        .into_iter()
        .map(|m| mask_to_graph(d.len(), m))
        .collect())
}

/// Number of labeled realizations, subject to the same caps as enumeration.
pub fn count_realizations(d: &DegreeSequence, limits: &Limits) -> Result<usize> {
    enumerate_masks(d, limits).map(|v| v.len())
}

fn splitted_rule(clique: usize) -> impl Fn(usize, usize) -> PairRule {
    move |i, j| match (i < clique, j < clique) {
        (true, true) => PairRule::Required,
        (false, false) => PairRule::Forbidden,
        _ => PairRule::Free,
    }
}

/// Whether `p` is the degree sequence of some split graph whose clique side
/// has degrees `p.clique_terms()` and independent side `p.indep_terms()`.
pub fn splitted_realizable(p: &SplittedSequence) -> Result<bool> {
    let degrees = p.vertex_degrees();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        return Ok(false);
    }
    let mut found = false;
    enumerate_with(&degrees, splitted_rule(p.clique_terms().len()), &mut |_: &[(
        usize,
        usize,
    )]| {
        found = true;
        ControlFlow::Break(())
    });
    Ok(found)
}

/// Realizations of `p` as splitted graphs: vertices `0..|p2|` form the clique
/// and carry the clique-side degrees, the rest are independent.
pub fn splitted_realizations(p: &SplittedSequence, limits: &Limits) -> Result<Vec<LabeledGraph>> {
    let degrees = p.vertex_degrees();
    let n = degrees.len();
    check_size(n, limits)?;
    let cap = limits.max_realizations;
    let mut out = Vec::new();
    let mut overflow = false;
    enumerate_with(&degrees, splitted_rule(p.clique_terms().len()), &mut |edges: &[(
        usize,
        usize,
    )]| {
        if out.len() == cap {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(LabeledGraph::from_edges(n, edges).expect("enumerated edges are in range"));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::BoundExceeded {
            what: "realization count",
            limit: cap,
            reached: out.len() + 1,
        });
    }
    Ok(out)
}

/// The 2-switch `{ab, cd} ⇉ {ad, bc}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoSwitch {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoSwitch {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        TwoSwitch { a, b, c, d }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// The switch that undoes this one.
    pub fn inverse(&self) -> TwoSwitch {
        TwoSwitch::new(self.a, self.d, self.c, self.b)
    }

    pub fn is_valid_in(&self, g: &LabeledGraph) -> bool {
        let [a, b, c, d] = self.vertices();
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        distinct
            && [a, b, c, d].iter().all(|&v| v < g.n())
            && g.has_edge(a, b)
            && g.has_edge(c, d)
            && !g.has_edge(a, d)
            && !g.has_edge(b, c)
    }
}

/// All 2-switches of `g`, one per distinct resulting graph. For each pair of
/// disjoint edges `ab < cd` (with `a < b`, `c < d`) the two rewirings are
/// reported as `(a, b, c, d)` and `(a, b, d, c)` when valid.
pub fn two_switches(g: &LabeledGraph) -> Vec<TwoSwitch> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[x + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, d) && !g.has_edge(b, c) {
                out.push(TwoSwitch::new(a, b, c, d));
            }
            if !g.has_edge(a, c) && !g.has_edge(b, d) {
                out.push(TwoSwitch::new(a, b, d, c));
            }
        }
    }
    out
}

pub fn apply_two_switch(g: &LabeledGraph, s: &TwoSwitch) -> Result<LabeledGraph> {
    if !s.is_valid_in(g) {
        return Err(Error::InvalidSwitch(s.vertices()));
    }
    let mut h = g.clone();
    h.remove_edge(s.a, s.b);
    h.remove_edge(s.c, s.d);
    h.add_edge(s.a, s.d);
    h.add_edge(s.b, s.c);
    Ok(h)
}

/// Masks of all graphs one 2-switch away from `mask`.
fn switch_neighbors(n: usize, mask: EdgeMask) -> Vec<EdgeMask> {
    let edges = mask_edges(n, mask);
    let has = |u: usize, v: usize| mask & pair_bit(n, u, v) != 0;
    let mut out = Vec::new();
    for (x, &(a, b)) in edges.iter().enumerate() {
        let ab = pair_bit(n, a, b);
        for &(c, d) in &edges[x + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let removed = ab | pair_bit(n, c, d);
            if !has(a, d) && !has(b, c) {
                out.push(mask ^ removed ^ pair_bit(n, a, d) ^ pair_bit(n, b, c));
            }
            if !has(a, c) && !has(b, d) {
                out.push(mask ^ removed ^ pair_bit(n, a, c) ^ pair_bit(n, b, d));
            }
        }
    }
    out
}

/// The realization graph of a degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationGraph {
    sequence: DegreeSequence,
    realizations: Vec<EdgeMask>,
    meta_edges: Vec<(usize, usize)>,
}

pub fn realization_graph(d: &DegreeSequence, limits: &Limits) -> Result<RealizationGraph> {
    let n = d.len();
    let realizations = enumerate_masks(d, limits)?;
    let index: HashMap<EdgeMask, usize> = realizations.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let neighbor_lists: Vec<Vec<usize>> = realizations
        .par_iter()
        .enumerate()
        .map(|(i, &mask)| {
            let mut adj: Vec<usize> = switch_neighbors(n, mask)
                .into_iter()
                .map(|m| index[&m])
                .filter(|&j| j > i)
                .collect();
            adj.sort_unstable();
            adj.dedup();
            adj
        })
        .collect();
    let meta_edges = neighbor_lists
        .into_iter()
        .enumerate()
        .flat_map(|(i, adj)| adj.into_iter().map(move |j| (i, j)))
        .collect();
    Ok(RealizationGraph {
        sequence: d.clone(),
        realizations,
        meta_edges,
    })
}

/// Serialized form: 0-based realization indices, 1-based vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationGraphJson {
    pub sequence: Vec<usize>,
    pub count: usize,
    pub edges: Vec<[usize; 2]>,
    pub realizations: Vec<Vec<[usize; 2]>>,
}

impl RealizationGraph {
    pub fn sequence(&self) -> &DegreeSequence {
        &self.sequence
    }

    /// Number of realizations.
    pub fn len(&self) -> usize {
        self.realizations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.realizations.is_empty()
    }

    pub fn realization(&self, i: usize) -> LabeledGraph {
        mask_to_graph(self.sequence.len(), self.realizations[i])
    }

    pub fn realizations(&self) -> impl Iterator<Item = LabeledGraph> + '_ {
        (0..self.len()).map(|i| self.realization(i))
    }

    /// Index of `g` among the realizations, if it is one.
    pub fn index_of(&self, g: &LabeledGraph) -> Option<usize> {
        if g.n() != self.sequence.len() {
            return None;
        }
        let mask = graph_to_mask(g);
        self.realizations
            .binary_search_by(|m| lex_cmp(self.sequence.len(), *m, mask))
            .ok()
    }

    /// Meta-edges `(i, j)` with `i < j`, sorted.
    pub fn meta_edges(&self) -> &[(usize, usize)] {
        &self.meta_edges
    }

    /// The realization graph as a [`LabeledGraph`] on realization indices.
    pub fn graph(&self) -> LabeledGraph {
        LabeledGraph::from_edges(self.len(), &self.meta_edges).expect("meta-edges index realizations")
    }

    pub fn to_json(&self) -> RealizationGraphJson {
        let n = self.sequence.len();
        RealizationGraphJson {
            sequence: self.sequence.terms().to_vec(),
            count: self.len(),
            edges: self.meta_edges.iter().map(|&(i, j)| [i, j]).collect(),
            realizations: self
                .realizations
                .iter()
                .map(|&m| mask_edges(n, m).into_iter().map(|(u, v)| [u + 1, v + 1]).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &RealizationGraphJson) -> Result<Self> {
        let sequence = DegreeSequence::new(json.sequence.clone())?;
        let n = sequence.len();
        if n > MAX_SUPPORTED_N {
            return Err(Error::BoundExceeded {
                what: "sequence length",
                limit: MAX_SUPPORTED_N,
                reached: n,
            });
        }
        if json.count != json.realizations.len() {
            return Err(Error::GraphFormat("count does not match realizations".into()));
        }
        let mut realizations = Vec::with_capacity(json.count);
        for edges in &json.realizations {
            let pairs: Vec<(usize, usize)> = edges
                .iter()
                .map(|&[u, v]| match (u.checked_sub(1), v.checked_sub(1)) {
                    (Some(u), Some(v)) => Ok((u, v)),
                    _ => Err(Error::GraphFormat("vertices are 1-based".into())),
                })
                .collect::<Result<_>>()?;
            let g = LabeledGraph::from_edges(n, &pairs)?;
            if g.degrees() != sequence.terms() {
                return Err(Error::GraphFormat("realization has wrong degrees".into()));
            }
            realizations.push(graph_to_mask(&g));
        }
        let meta_edges = json
            .edges
            .iter()
            .map(|&[i, j]| {
                if i < j && j < json.count {
                    Ok((i, j))
                } else {
                    Err(Error::GraphFormat(format!("bad meta-edge [{i},{j}]")))
                }
            })
            .collect::<Result<_>>()?;
        Ok(RealizationGraph {
            sequence,
            realizations,
            meta_edges,
        })
    }

    /// DOT of the meta-graph; vertex `i + 1` is labelled `R<i>`.
    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = (0..self.len()).map(|i| format!("R{i}")).collect();
        io::to_dot(&self.graph(), Some(&labels))
    }
}

fn lex_cmp(n: usize, a: EdgeMask, b: EdgeMask) -> std::cmp::Ordering {
    mask_edges(n, a).cmp(&mask_edges(n, b))
}

/// Vertex-exact composition `(P, A, B) ∘ Q`.
///
/// Clique vertices `B` of `P` (in increasing order) become `0..|B|`, vertex
/// `i` of `Q` becomes `|B| + i`, independent vertices `A` (in increasing
/// order) fill the tail, and every clique vertex is joined to every vertex of `Q`.
pub fn compose_graphs(p: &LabeledGraph, indep: &[usize], clique: &[usize], q: &LabeledGraph) -> Result<LabeledGraph> {
    let mut a = indep.to_vec();
    let mut b = clique.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let mut seen = vec![false; p.n()];
    for &v in a.iter().chain(&b) {
        if v >= p.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPartition(format!("vertex {v} repeated or out of range")));
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InvalidPartition("sets do not cover the split graph".into()));
    }
    if a.iter()
        .enumerate()
        .any(|(i, &u)| a[i + 1..].iter().any(|&v| p.has_edge(u, v)))
    {
        return Err(Error::InvalidPartition("independent side has an edge".into()));
    }
    if b.iter()
        .enumerate()
        .any(|(i, &u)| b[i + 1..].iter().any(|&v| !p.has_edge(u, v)))
    {
        return Err(Error::InvalidPartition("clique side misses an edge".into()));
    }
    let (kb, m) = (b.len(), q.n());
    let mut position = vec![0; p.n()];
    for (i, &v) in b.iter().enumerate() {
        position[v] = i;
    }
    for (i, &v) in a.iter().enumerate() {
        position[v] = kb + m + i;
    }
    let mut out = LabeledGraph::new(p.n() + m);
    for (u, v) in p.edges() {
        out.add_edge(position[u], position[v]);
    }
    for (u, v) in q.edges() {
        out.add_edge(kb + u, kb + v);
    }
    for u in 0..kb {
        for v in kb..kb + m {
            out.add_edge(u, v);
        }
    }
    Ok(out)
}

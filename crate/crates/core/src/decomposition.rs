//! Canonical decomposition of degree sequences and graphs into indecomposable
//! components under composition.
//!
//! A sequence `d` of length `n` splits off a component with `p` clique
//! vertices and `q` independent vertices exactly when `d = α ∘ d'` with
//! `|α| = p + q` and `|d'| = n - p - q >= 1`. Because composition places the
//! augmented clique terms first and the independent terms last, such a split
//! can only use the top `p` and bottom `q` positions of `d`. The canonical
//! leftmost component is the smallest valid split (ties: fewer independent
//! vertices); the rest of the decomposition comes from recursing on `d'`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::realizer::{compose_graphs, splitted_realizable};
use crate::sequence::{compose_sequences, is_graphical, is_graphical_terms, DegreeSequence, SplittedSequence};

/// Sizes of a split-off component: `clique` top positions, `indep` bottom positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitOff {
    pub clique: usize,
    pub indep: usize,
}

/// Splitted component and residual sequence for a candidate split, if the
/// candidate is arithmetically consistent and both parts are realizable.
fn extract(d: &DegreeSequence, p: usize, q: usize) -> Result<Option<(SplittedSequence, DegreeSequence)>> {
    let t = d.terms();
    let n = t.len();
    if p + q == 0 || p + q >= n {
        return Ok(None);
    }
    let m = n - p - q;
    let (top, rest) = t.split_at(p);
    let (middle, bottom) = rest.split_at(m);
    // clique vertices see every other clique vertex and all of the middle
    if top.iter().any(|&x| x < n - q - 1) {
        return Ok(None);
    }
    // independent vertices see only clique vertices
    if bottom.iter().any(|&x| x > p) {
        return Ok(None);
    }
    // edges between clique and independent side, counted from both ends
    let top_sum: usize = top.iter().sum();
    let bottom_sum: usize = bottom.iter().sum();
    if top_sum != p * (n - q - 1) + bottom_sum {
        return Ok(None);
    }
    if middle.iter().any(|&x| x < p) {
        return Ok(None);
    }
    let residual: Vec<usize> = middle.iter().map(|&x| x - p).collect();
    if !is_graphical_terms(&residual) {
        return Ok(None);
    }
    let Ok(component) = SplittedSequence::new(top.iter().map(|&x| x - m).collect(), bottom.to_vec()) else {
        return Ok(None);
    };
    if !splitted_realizable(&component)? {
        return Ok(None);
    }
    let residual = DegreeSequence::new(residual).expect("graphical residual is well-formed");
    Ok(Some((component, residual)))
}

/// Smallest valid split-off of `d`, or `None` when `d` is indecomposable.
pub fn find_split_off(d: &DegreeSequence) -> Result<Option<SplitOff>> {
    Ok(leftmost_component(d)?.map(|(s, _, _)| s))
}

fn leftmost_component(d: &DegreeSequence) -> Result<Option<(SplitOff, SplittedSequence, DegreeSequence)>> {
    if !is_graphical(d) {
        return Err(Error::NotGraphical(d.to_string()));
    }
    let n = d.len();
    for size in 1..n {
        for q in 0..=size {
            let p = size - q;
            if let Some((component, residual)) = extract(d, p, q)? {
                return Ok(Some((SplitOff { clique: p, indep: q }, component, residual)));
            }
        }
    }
    Ok(None)
}

pub fn is_indecomposable_seq(d: &DegreeSequence) -> Result<bool> {
    Ok(find_split_off(d)?.is_none())
}

/// `d = α_1 ∘ ... ∘ α_k ∘ d_0` with every part indecomposable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalDecomposition {
    pub components: Vec<SplittedSequence>,
    pub tail: DegreeSequence,
}

impl fmt::Display for CanonicalDecomposition {
    /// `(2,2;1,1) o (1,1,1,1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.components {
            write!(f, "{c} o ")?;
        }
        write!(f, "{}", self.tail)
    }
}

#[derive(Serialize)]
struct ComponentJson<'a> {
    clique: &'a [usize],
    indep: &'a [usize],
}

#[derive(Serialize)]
struct DecompositionJson<'a> {
    components: Vec<ComponentJson<'a>>,
    tail: &'a [usize],
}

impl CanonicalDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        let doc = DecompositionJson {
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    clique: c.clique_terms(),
                    indep: c.indep_terms(),
                })
                .collect(),
            tail: self.tail.terms(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    /// Unsplitted sequences of all parts, tail last.
    pub fn part_sequences(&self) -> Vec<DegreeSequence> {
        self.components
            .iter()
            .map(SplittedSequence::unsplitted)
            .chain(std::iter::once(self.tail.clone()))
            .collect()
    }
}

pub fn canonical_decomposition_seq(d: &DegreeSequence) -> Result<CanonicalDecomposition> {
    let mut components = Vec::new();
    let mut current = d.clone();
    while let Some((_, component, residual)) = leftmost_component(&current)? {
        components.push(component);
        current = residual;
    }
    Ok(CanonicalDecomposition {
        components,
        tail: current,
    })
}

/// Right fold of sequence composition.
pub fn recompose(dec: &CanonicalDecomposition) -> Result<DegreeSequence> {
    dec.components
        .iter()
        .rev()
        .try_fold(dec.tail.clone(), |acc, c| compose_sequences(c, &acc))
}

/// One splitted component of a concrete graph.
///
/// `graph` is a realization of the component's splitted sequence: its clique
/// occupies local vertices `0..clique_size`, each side ordered by descending
/// degree. `vertices[i]` is the original vertex behind local vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphComponent {
    pub graph: LabeledGraph,
    pub clique_size: usize,
    pub vertices: Vec<usize>,
}

impl GraphComponent {
    /// Local independent vertices `A`.
    pub fn indep(&self) -> Vec<usize> {
        (self.clique_size..self.graph.n()).collect()
    }

    /// Local clique vertices `B`.
    pub fn clique(&self) -> Vec<usize> {
        (0..self.clique_size).collect()
    }

    pub fn splitted_sequence(&self) -> SplittedSequence {
        let deg = self.graph.degrees();
        SplittedSequence::new(deg[..self.clique_size].to_vec(), deg[self.clique_size..].to_vec())
            .expect("component degrees are well-formed")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDecomposition {
    pub components: Vec<GraphComponent>,
    pub tail: LabeledGraph,
    pub tail_vertices: Vec<usize>,
}

impl GraphDecomposition {
    /// Index of the component holding original vertex `v`; the tail is `components.len()`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.vertices.contains(&v))
            .or_else(|| self.tail_vertices.contains(&v).then_some(self.components.len()))
    }

    /// Composes the parts with [`compose_graphs`]. Returns the composed graph
    /// (a realization of the degree sequence, vertex `i` of degree `d_i`) and
    /// the original vertex sitting at each position.
    pub fn compose(&self) -> Result<(LabeledGraph, Vec<usize>)> {
        let mut graph = self.tail.clone();
        let mut origin = self.tail_vertices.clone();
        for c in self.components.iter().rev() {
            graph = compose_graphs(&c.graph, &c.indep(), &c.clique(), &graph)?;
            let mut next = c.vertices[..c.clique_size].to_vec();
            next.extend(origin);
            next.extend_from_slice(&c.vertices[c.clique_size..]);
            origin = next;
        }
        Ok((graph, origin))
    }

    /// Recomposition in the original labeling; equals the decomposed graph.
    pub fn recompose(&self) -> Result<LabeledGraph> {
        let (graph, origin) = self.compose()?;
        Ok(graph.relabel(&origin))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let one_based = |vs: &[usize]| vs.iter().map(|v| v + 1).collect::<Vec<_>>();
        let components: Vec<serde_json::Value> = self
            .components
            .iter()
            .map(|c| {
                let s = c.splitted_sequence();
                serde_json::json!({
                    "clique": s.clique_terms(),
                    "indep": s.indep_terms(),
                    "clique_vertices": one_based(&c.vertices[..c.clique_size]),
                    "indep_vertices": one_based(&c.vertices[c.clique_size..]),
                })
            })
            .collect();
        serde_json::json!({
            "components": components,
            "tail": self.tail.degrees(),
            "tail_vertices": one_based(&self.tail_vertices),
        })
    }
}

/// `vertices` sorted by degree in `g` (descending), ties by vertex id.
fn by_degree(g: &LabeledGraph, vertices: &[usize]) -> Vec<usize> {
    let mut vs = vertices.to_vec();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs
}

/// Choices of `count` vertices from `pool` (sorted by degree) that keep the
/// degree multiset of the top `count`: all vertices strictly above the
/// boundary degree, plus any subset of the boundary-degree vertices.
fn boundary_choices(degree: impl Fn(usize) -> usize, pool: &[usize], count: usize, from_top: bool) -> Vec<Vec<usize>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    let ordered: Vec<usize> = if from_top {
        pool.to_vec()
    } else {
        pool.iter().rev().copied().collect()
    };
    let boundary = degree(ordered[count - 1]);
    let fixed: Vec<usize> = ordered[..count]
        .iter()
        .copied()
        .filter(|&v| degree(v) != boundary)
        .collect();
    let tied: Vec<usize> = ordered.iter().copied().filter(|&v| degree(v) == boundary).collect();
    tied.into_iter()
        .combinations(count - fixed.len())
        .map(|extra| {
            let mut set = fixed.clone();
            set.extend(extra);
            set
        })
        .collect()
}

pub fn canonical_decomposition_graph(g: &LabeledGraph) -> Result<GraphDecomposition> {
    let dec = canonical_decomposition_seq(&g.degree_sequence())?;
    let mut rest: Vec<usize> = (0..g.n()).collect();
    let mut components = Vec::with_capacity(dec.components.len());
    for alpha in &dec.components {
        let (p, q) = (alpha.clique_terms().len(), alpha.indep_terms().len());
        let sub = g.induced_subgraph(&rest);
        let local_deg = |v: usize| sub.degree(rest.binary_search(&v).expect("vertex in rest"));
        let mut pool = rest.clone();
        pool.sort_by_key(|&v| (std::cmp::Reverse(local_deg(v)), v));
        let mut found = None;
        'search: for b in boundary_choices(local_deg, &pool, p, true) {
            for a in boundary_choices(local_deg, &pool, q, false) {
                if a.iter().any(|v| b.contains(v)) {
                    continue;
                }
                let middle: Vec<usize> = rest
                    .iter()
                    .copied()
                    .filter(|v| !a.contains(v) && !b.contains(v))
                    .collect();
                if is_split_layer(g, &b, &a, &middle) {
                    found = Some((b, a, middle));
                    break 'search;
                }
            }
        }
        let (b, a, middle) =
            found.ok_or_else(|| Error::Internal(format!("no vertex partition matches component {alpha}")))?;
        // order each side by degree inside the component
        let comp_set = sorted(&b, &a);
        let comp = g.induced_subgraph(&comp_set);
        let comp_deg = |v: usize| comp.degree(comp_set.binary_search(&v).expect("vertex in component"));
        let mut bs = b.clone();
        bs.sort_by_key(|&v| (std::cmp::Reverse(comp_deg(v)), v));
        let mut as_ = a.clone();
        as_.sort_by_key(|&v| (std::cmp::Reverse(comp_deg(v)), v));
        let mut vertices = bs;
        vertices.extend(as_);
        components.push(GraphComponent {
            graph: g.induced_subgraph(&vertices),
            clique_size: p,
            vertices,
        });
        rest = middle;
    }
    let tail_graph = g.induced_subgraph(&rest);
    let tail_vertices = {
        let mut vs = rest.clone();
        let deg = |v: usize| tail_graph.degree(rest.binary_search(&v).expect("vertex in tail"));
        vs.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
        vs
    };
    Ok(GraphDecomposition {
        components,
        tail: g.induced_subgraph(&tail_vertices),
        tail_vertices,
    })
}

fn sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// `clique` is a clique complete to `middle`, `indep` is independent and
/// anticomplete to `middle`, and `middle` is non-empty.
fn is_split_layer(g: &LabeledGraph, clique: &[usize], indep: &[usize], middle: &[usize]) -> bool {
    !middle.is_empty()
        && clique.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v))
        && indep.iter().tuple_combinations().all(|(&u, &v)| !g.has_edge(u, v))
        && clique.iter().all(|&u| middle.iter().all(|&v| g.has_edge(u, v)))
        && indep.iter().all(|&u| middle.iter().all(|&v| !g.has_edge(u, v)))
}

/// The clique/independent partition `(A, B)` of an indecomposable split graph:
/// `B` is the `q` highest-degree vertices with `q = max{i : d_i >= i - 1}`.
pub fn unique_split_partition(s: &LabeledGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    if !crate::classify::is_split_graph(s) {
        return Err(Error::NotSplit);
    }
    let d = s.degree_sequence();
    if !is_indecomposable_seq(&d)? {
        return Err(Error::Decomposable);
    }
    let q = crate::sequence::split_partition_index(&d);
    let all: Vec<usize> = (0..s.n()).collect();
    let pool = by_degree(s, &all);
    for b in boundary_choices(|v| s.degree(v), &pool, q, true) {
        let a: Vec<usize> = all.iter().copied().filter(|v| !b.contains(v)).collect();
        let clique_ok = b.iter().tuple_combinations().all(|(&u, &v)| s.has_edge(u, v));
        let indep_ok = a.iter().tuple_combinations().all(|(&u, &v)| !s.has_edge(u, v));
        if clique_ok && indep_ok {
            let mut b = b;
            b.sort_unstable();
            return Ok((a, b));
        }
    }
    Err(Error::Internal(
        "top-degree vertices do not form a split partition".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::realizer::compose_graphs;
    use crate::sequence::{parse_sequence, parse_splitted};

    fn seq(text: &str) -> DegreeSequence {
        parse_sequence(text).unwrap()
    }

    #[test]
    fn split_off_examples() {
        assert_eq!(
            find_split_off(&seq("6,6,3,3,3,3,1,1")).unwrap(),
            Some(SplitOff { clique: 2, indep: 2 })
        );
        assert_eq!(find_split_off(&seq("3,3,3,1,1,1")).unwrap(), None);
        assert_eq!(find_split_off(&seq("2,2,2,2,2")).unwrap(), None);
        assert_eq!(find_split_off(&seq("0")).unwrap(), None);
        assert!(matches!(find_split_off(&seq("3,3,1,1")), Err(Error::NotGraphical(_))));
        // a dominating vertex over an isolated one
        assert_eq!(
            find_split_off(&seq("1,1")).unwrap(),
            Some(SplitOff { clique: 1, indep: 0 })
        );
        assert_eq!(
            find_split_off(&seq("1,1,0")).unwrap(),
            Some(SplitOff { clique: 0, indep: 1 })
        );
    }

    #[test]
    fn decomposition_examples() {
        let dec = canonical_decomposition_seq(&seq("6,6,3,3,3,3,1,1")).unwrap();
        assert_eq!(dec.components, vec![parse_splitted("2,2;1,1").unwrap()]);
        assert_eq!(dec.tail, seq("1,1,1,1"));
        assert_eq!(dec.to_string(), "(2,2;1,1) o (1,1,1,1)");
        assert_eq!(
            dec.to_json().to_string(),
            r#"{"components":[{"clique":[2,2],"indep":[1,1]}],"tail":[1,1,1,1]}"#
        );

        let dec = canonical_decomposition_seq(&seq("1,1,1,1")).unwrap();
        assert!(dec.components.is_empty());
        assert_eq!(dec.tail, seq("1,1,1,1"));

        let dec = canonical_decomposition_seq(&seq("0")).unwrap();
        assert!(dec.components.is_empty());
        assert_eq!(dec.tail, seq("0"));

        let dec = canonical_decomposition_seq(&seq("2,2,2")).unwrap();
        assert_eq!(dec.to_string(), "(0;) o (0;) o (0)");
    }

    #[test]
    fn indecomposability_examples() {
        assert!(is_indecomposable_seq(&seq("3,2,1,1,1")).unwrap());
        assert!(is_indecomposable_seq(&seq("2,2,2,2,2")).unwrap());
        assert!(is_indecomposable_seq(&seq("2,2,1,1")).unwrap());
        assert!(!is_indecomposable_seq(&seq("1,1")).unwrap());
        assert!(!is_indecomposable_seq(&seq("3,3,1,1,1,1,0")).unwrap());
    }

    #[test]
    fn recompose_examples() {
        let dec = CanonicalDecomposition {
            components: vec![parse_splitted("2,2;1,1").unwrap()],
            tail: seq("1,1,1,1"),
        };
        assert_eq!(recompose(&dec).unwrap(), seq("6,6,3,3,3,3,1,1"));
        let dec = CanonicalDecomposition {
            components: vec![],
            tail: seq("2,2,2,2,2"),
        };
        assert_eq!(recompose(&dec).unwrap(), seq("2,2,2,2,2"));
        let dec = CanonicalDecomposition {
            components: vec![parse_splitted("0;").unwrap()],
            tail: seq("1,1"),
        };
        assert_eq!(recompose(&dec).unwrap(), seq("2,2,2"));
        let bad = CanonicalDecomposition {
            components: vec![parse_splitted("0,0;").unwrap()],
            tail: seq("1,1"),
        };
        assert!(recompose(&bad).is_err());
    }

    #[test]
    fn graph_decomposition_of_composition_figure() {
        let p4 = LabeledGraph::from_edges(4, &[(0, 2), (0, 1), (1, 3)]).unwrap();
        let f = compose_graphs(&p4, &[2, 3], &[0, 1], &matching(2)).unwrap();
        let dec = canonical_decomposition_graph(&f).unwrap();
        assert_eq!(dec.components.len(), 1);
        let c = &dec.components[0];
        assert_eq!(c.vertices, vec![0, 1, 6, 7]);
        assert_eq!(c.splitted_sequence(), parse_splitted("2,2;1,1").unwrap());
        assert!(crate::graph::is_isomorphic(&c.graph, &path(4).unwrap()));
        assert_eq!(dec.tail.degrees(), vec![1, 1, 1, 1]);
        assert_eq!(dec.tail_vertices, vec![2, 3, 4, 5]);
        assert_eq!(dec.recompose().unwrap(), f);
        let (composed, _) = dec.compose().unwrap();
        assert_eq!(composed, f);
    }

    #[test]
    fn graph_decomposition_small_cases() {
        let c5 = cycle(5).unwrap();
        let dec = canonical_decomposition_graph(&c5).unwrap();
        assert!(dec.components.is_empty());
        assert_eq!(dec.tail, c5);

        let k3 = complete(3);
        let dec = canonical_decomposition_graph(&k3).unwrap();
        assert_eq!(dec.components.len(), 2);
        assert!(dec.components.iter().all(|c| c.clique_size == 1 && c.graph.n() == 1));
        assert_eq!(dec.tail.n(), 1);
        assert_eq!(dec.recompose().unwrap(), k3);

        // ties between a pendant vertex and the middle
        let g = LabeledGraph::from_edges(5, &[(4, 0), (4, 1), (4, 2), (4, 3), (0, 1)]).unwrap();
        let dec = canonical_decomposition_graph(&g).unwrap();
        assert_eq!(dec.recompose().unwrap(), g);
        for v in 0..5 {
            assert!(dec.component_of(v).is_some());
        }
    }

    #[test]
    fn split_partition_examples() {
        let (a, b) = unique_split_partition(&k_net(3).unwrap()).unwrap();
        assert_eq!((a, b), (vec![3, 4, 5], vec![0, 1, 2]));
        let (a, b) = unique_split_partition(&path(4).unwrap()).unwrap();
        assert_eq!((a, b), (vec![0, 3], vec![1, 2]));
        assert_eq!(unique_split_partition(&cycle(5).unwrap()), Err(Error::NotSplit));
        assert_eq!(unique_split_partition(&complete(2)), Err(Error::Decomposable));
        assert_eq!(unique_split_partition(&complete(1)).unwrap(), (vec![], vec![0]));
        let (a, b) = unique_split_partition(&net_complement(3).unwrap()).unwrap();
        assert_eq!((a, b), (vec![0, 1, 2], vec![3, 4, 5]));
    }
}

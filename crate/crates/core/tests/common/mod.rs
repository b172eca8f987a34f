//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use switchlab::graph::LabeledGraph;

/// Havel–Hakimi on arbitrary (unsorted) terms.
pub fn havel_hakimi(terms: &[usize]) -> bool {
    let mut d = terms.to_vec();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        while d.last() == Some(&0) {
            d.pop();
        }
        let Some((&first, rest)) = d.split_first() else {
            return true;
        };
        if first > rest.len() {
            return false;
        }
        let mut next = rest.to_vec();
        for t in next.iter_mut().take(first) {
            if *t == 0 {
                return false;
            }
            *t -= 1;
        }
        d = next;
    }
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

/// Graph on `n` vertices whose edge set is selected by the bits of `mask` over [`pairs`].
pub fn graph_from_bits(n: usize, mask: u64) -> LabeledGraph {
    let mut g = LabeledGraph::new(n);
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let m = n * n.saturating_sub(1) / 2;
    (0..1u64 << m).map(move |mask| graph_from_bits(n, mask))
}

pub fn random_graph(n: usize, rng: &mut impl Rng) -> LabeledGraph {
    let m = n * (n - 1) / 2;
    graph_from_bits(n, rng.gen_range(0..1u64 << m))
}

/// Labeled graphs in which vertex `i` has degree `d[i]`, as sorted edge lists.
pub fn brute_realizations(d: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n = d.len();
    let mut out: Vec<Vec<(usize, usize)>> = all_graphs(n)
        .filter(|g| g.degrees() == d)
        .map(|g| g.edges().collect())
        .collect();
    out.sort();
    out
}

/// Some partition of the vertices into a clique and an independent set exists.
pub fn split_by_partition(g: &LabeledGraph) -> bool {
    let n = g.n();
    (0..1u32 << n).any(|clique_mask| {
        let inside = |v: usize| clique_mask >> v & 1 == 1;
        (0..n).tuple_combinations().all(|(u, v)| match (inside(u), inside(v)) {
            (true, true) => g.has_edge(u, v),
            (false, false) => !g.has_edge(u, v),
            _ => true,
        })
    })
}

fn induces_c5(g: &LabeledGraph, vs: &[usize]) -> bool {
    vs.len() == 5 && {
        let h = g.induced_subgraph(vs);
        h.degrees().iter().all(|&x| x == 2) && h.is_connected()
    }
}

/// Partition into `V1` independent, `V2` clique, `V3` empty or an induced
/// `C5` that is complete to `V2` and anticomplete to `V1`.
pub fn pseudo_split_by_partition(g: &LabeledGraph) -> bool {
    if split_by_partition(g) {
        return true;
    }
    let n = g.n();
    (0..n).combinations(5).any(|five| {
        if !induces_c5(g, &five) {
            return false;
        }
        let rest: Vec<usize> = (0..n).filter(|v| !five.contains(v)).collect();
        (0..1u32 << rest.len()).any(|clique_mask| {
            let inside = |i: usize| clique_mask >> i & 1 == 1;
            let sides_ok = rest
                .iter()
                .enumerate()
                .all(|(i, &v)| five.iter().all(|&c| g.has_edge(v, c) == inside(i)));
            let parts_ok = (0..rest.len()).tuple_combinations().all(|(i, j)| {
                let e = g.has_edge(rest[i], rest[j]);
                match (inside(i), inside(j)) {
                    (true, true) => e,
                    (false, false) => !e,
                    _ => true,
                }
            });
            sides_ok && parts_ok
        })
    })
}

fn induces_p4(g: &LabeledGraph, vs: &[usize]) -> bool {
    let h = g.induced_subgraph(vs);
    let mut deg = h.degrees();
    deg.sort_unstable();
    h.edge_count() == 3 && deg == [1, 1, 2, 2]
}

/// Every vertex lies in at most one induced `P4`.
pub fn p4_reducible_by_counting(g: &LabeledGraph) -> bool {
    let n = g.n();
    let mut count = vec![0usize; n];
    for four in (0..n).combinations(4) {
        if induces_p4(g, &four) {
            for v in four {
                count[v] += 1;
                if count[v] > 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Some assignment of vertices to clique, independent set, and a non-empty
/// middle, with at least one vertex outside the middle, is a valid split layer.
pub fn has_split_layer(g: &LabeledGraph) -> bool {
    let n = g.n();
    // 0 = middle, 1 = clique, 2 = independent
    (0..3usize.pow(n as u32)).any(|code| {
        let mut role = vec![0u8; n];
        let mut c = code;
        for r in role.iter_mut() {
            *r = (c % 3) as u8;
            c /= 3;
        }
        if role.iter().all(|&r| r == 0) || role.iter().all(|&r| r != 0) {
            return false;
        }
        (0..n).tuple_combinations().all(|(u, v)| {
            let e = g.has_edge(u, v);
            match (role[u], role[v]) {
                (1, 1) | (1, 0) | (0, 1) => e,
                (2, 2) | (2, 0) | (0, 2) => !e,
                _ => true,
            }
        })
    })
}

/// A sequence is decomposable exactly when some realization has a split layer.
pub fn decomposable_by_realizations(d: &[usize]) -> bool {
    let n = d.len();
    brute_realizations(d)
        .into_iter()
        .any(|edges| has_split_layer(&LabeledGraph::from_edges(n, &edges).unwrap()))
}

/// Descending sequences of length `n` with terms at most `max_term`.
pub fn descending_sequences(n: usize, max_term: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|_| (0..=max_term).rev())
        .multi_cartesian_product()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

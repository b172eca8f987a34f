//! Library results checked against brute-force oracles on small inputs.

mod common;

use std::collections::HashMap;

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use switchlab::classify::{graphical_sequences, is_split_graph, predict_realization_graph};
use switchlab::graph::named::{complete, net_complement};
use switchlab::graph::{is_isomorphic, LabeledGraph};
use switchlab::realizer::{apply_two_switch, enumerate_realizations, two_switches};
use switchlab::{
    canonical_decomposition_graph, canonical_decomposition_seq, is_indecomposable_seq, parse_sequence,
    realization_graph, unique_split_partition, DegreeSequence, Limits,
};

fn lim() -> Limits {
    Limits::default()
}

/// All labeled graphs on `n` vertices grouped by their vertex-degree vector.
fn graphs_by_degrees(n: usize) -> HashMap<Vec<usize>, Vec<LabeledGraph>> {
    let mut map: HashMap<Vec<usize>, Vec<LabeledGraph>> = HashMap::new();
    for g in common::all_graphs(n) {
        map.entry(g.degrees()).or_default().push(g);
    }
    map
}

#[test]
fn realizations_match_brute_force() {
    for n in 1..=6 {
        let by_degrees = graphs_by_degrees(n);
        for d in graphical_sequences(n).into_iter().filter(|d| d.len() == n) {
            let ours: Vec<Vec<(usize, usize)>> = enumerate_realizations(&d, &lim())
                .unwrap()
                .iter()
                .map(|g| g.edges().collect())
                .collect();
            let mut brute: Vec<Vec<(usize, usize)>> =
                by_degrees[d.terms()].iter().map(|g| g.edges().collect()).collect();
            brute.sort();
            assert_eq!(ours, brute, "{d}");
        }
    }
}

#[test]
fn meta_edges_are_exactly_symmetric_differences_of_four() {
    for d in graphical_sequences(6) {
        let rg = realization_graph(&d, &lim()).unwrap();
        let edge_sets: Vec<Vec<(usize, usize)>> = rg.realizations().map(|g| g.edges().collect()).collect();
        let mut expected = Vec::new();
        for (i, j) in (0..rg.len()).tuple_combinations() {
            let diff = edge_sets[i].iter().filter(|e| !edge_sets[j].contains(e)).count();
            if diff == 2 {
                expected.push((i, j));
            }
        }
        assert_eq!(rg.meta_edges(), &expected[..], "{d}");
    }
}

#[test]
fn decomposability_matches_split_layer_oracle() {
    for n in 1..=6 {
        let by_degrees = graphs_by_degrees(n);
        for d in graphical_sequences(n).into_iter().filter(|d| d.len() == n) {
            let oracle = by_degrees[d.terms()].iter().any(common::has_split_layer);
            assert_eq!(!is_indecomposable_seq(&d).unwrap(), oracle, "{d}");
        }
    }
}

#[test]
fn canonical_parts_are_indecomposable() {
    for d in graphical_sequences(7) {
        let dec = canonical_decomposition_seq(&d).unwrap();
        for part in dec.part_sequences() {
            assert!(is_indecomposable_seq(&part).unwrap(), "{d}: part {part}");
        }
    }
}

fn check_graph_decomposition(g: &LabeledGraph) {
    let dec = canonical_decomposition_graph(g).unwrap();
    let seq_dec = canonical_decomposition_seq(&g.degree_sequence()).unwrap();
    assert_eq!(dec.components.len(), seq_dec.components.len());
    for (c, alpha) in dec.components.iter().zip(&seq_dec.components) {
        assert_eq!(&c.splitted_sequence(), alpha);
        assert_eq!(c.graph.degrees(), alpha.vertex_degrees());
        let (a, b) = (c.indep(), c.clique());
        assert!(b.iter().tuple_combinations().all(|(&u, &v)| c.graph.has_edge(u, v)));
        assert!(a.iter().tuple_combinations().all(|(&u, &v)| !c.graph.has_edge(u, v)));
    }
    assert_eq!(dec.tail.degrees(), seq_dec.tail.terms());
    let (composed, _) = dec.compose().unwrap();
    assert_eq!(composed.degrees(), g.degree_sequence().terms());
    assert_eq!(&dec.recompose().unwrap(), g);
}

#[test]
fn graph_decomposition_round_trips_exhaustively() {
    for n in 1..=6 {
        for g in common::all_graphs(n) {
            check_graph_decomposition(&g);
        }
    }
    (0..1u64 << 21).into_par_iter().for_each(|mask| {
        check_graph_decomposition(&common::graph_from_bits(7, mask));
    });
}

fn check_switches_stay_in_component(g: &LabeledGraph) {
    let dec = canonical_decomposition_graph(g).unwrap();
    for s in two_switches(g) {
        let parts: Vec<usize> = s.vertices().iter().map(|&v| dec.component_of(v).unwrap()).collect();
        assert!(parts.iter().all_equal(), "{g:?}: switch {s:?} spans parts {parts:?}");
    }
}

#[test]
fn two_switches_stay_inside_one_component() {
    for n in 4..=6 {
        for g in common::all_graphs(n) {
            check_switches_stay_in_component(&g);
        }
    }
    // every graph on 7 vertices, split across threads
    (0..1u64 << 21).into_par_iter().for_each(|mask| {
        check_switches_stay_in_component(&common::graph_from_bits(7, mask));
    });
}

#[test]
fn split_components_have_two_terms_per_side() {
    for d in graphical_sequences(7) {
        for alpha in canonical_decomposition_seq(&d).unwrap().components {
            if alpha.len() > 1 {
                assert!(
                    alpha.clique_terms().len() >= 2 && alpha.indep_terms().len() >= 2,
                    "{d}: {alpha}"
                );
            }
        }
    }
}

#[test]
fn indecomposable_split_graphs_have_one_partition() {
    for n in 2..=6 {
        for g in common::all_graphs(n) {
            if !is_split_graph(&g) || !is_indecomposable_seq(&g.degree_sequence()).unwrap() {
                continue;
            }
            let n = g.n();
            let partitions: Vec<u32> = (0..1u32 << n)
                .filter(|&mask| {
                    (0..n)
                        .tuple_combinations()
                        .all(|(u, v)| match (mask >> u & 1, mask >> v & 1) {
                            (1, 1) => g.has_edge(u, v),
                            (0, 0) => !g.has_edge(u, v),
                            _ => true,
                        })
                })
                .collect();
            assert_eq!(partitions.len(), 1, "{g:?}");
            let (a, b) = unique_split_partition(&g).unwrap();
            let mask = b.iter().fold(0u32, |m, &v| m | 1 << v);
            assert_eq!(mask, partitions[0]);
            assert_eq!(a.len() + b.len(), n);
        }
    }
}

/// Vertices of `g` sorted by descending degree, ties by index.
fn degree_order(g: &LabeledGraph) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..g.n()).collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs
}

/// `g` relabelled so that vertex degrees are descending.
fn sorted_labels(g: &LabeledGraph) -> LabeledGraph {
    let order = degree_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    g.relabel(&position)
}

/// Replaces the induced subgraph on `subset` by each realization of its
/// degree sequence and checks the images induce a copy of the smaller
/// realization graph inside the larger one.
fn check_induced_lemma(q: &LabeledGraph, subset: &[usize]) {
    let p_graph = q.induced_subgraph(subset);
    let p_order = degree_order(&p_graph);
    let p = p_graph.degree_sequence();
    let q_seq = q.degree_sequence();
    let rp = realization_graph(&p, &lim()).unwrap();
    let rq = realization_graph(&q_seq, &lim()).unwrap();
    let mut image = Vec::with_capacity(rp.len());
    for r in rp.realizations() {
        let mut replaced = q.clone();
        for (u, v) in subset.iter().tuple_combinations() {
            replaced.remove_edge(*u, *v);
        }
        for (i, j) in r.edges() {
            replaced.add_edge(subset[p_order[i]], subset[p_order[j]]);
        }
        assert_eq!(replaced.degrees(), q.degrees());
        image.push(
            rq.index_of(&sorted_labels(&replaced))
                .expect("replacement is a realization"),
        );
    }
    assert!(image.iter().all_unique());
    let induced = rq.graph().induced_subgraph(&image);
    assert_eq!(induced, rp.graph(), "{q:?} on {subset:?}");
}

#[test]
fn realization_graphs_respect_induced_subgraphs() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(4..=7);
        let q = common::random_graph(n, &mut rng);
        let mut vertices: Vec<usize> = (0..n).collect();
        vertices.shuffle(&mut rng);
        let k = rng.gen_range(2..=n);
        let mut subset = vertices[..k].to_vec();
        subset.sort_unstable();
        check_induced_lemma(&q, &subset);
    }
}

#[test]
fn complement_examples() {
    for text in ["2,2,2,2", "3,3,3,2,1"] {
        let g = realization_graph(&parse_sequence(text).unwrap(), &lim())
            .unwrap()
            .graph();
        assert!(is_isomorphic(&g, &complete(3)), "{text}");
    }
    for k in 2..=4 {
        let d = net_complement(k).unwrap().degree_sequence();
        assert!(realization_graph(&d, &lim()).unwrap().graph().is_bipartite(), "{d}");
    }
}

#[test]
fn known_predictions_match_direct_construction() {
    let mut known = 0;
    for d in graphical_sequences(7) {
        let prediction = predict_realization_graph(&d).unwrap();
        if !prediction.all_known() {
            continue;
        }
        known += 1;
        let direct = realization_graph(&d, &lim()).unwrap().graph();
        assert!(
            is_isomorphic(&direct, &prediction.product_graph(&lim()).unwrap()),
            "{d}"
        );
    }
    assert!(known > 20);
}

#[test]
fn switching_walks_stay_realizations() {
    let mut rng = StdRng::seed_from_u64(14);
    let d: DegreeSequence = parse_sequence("4,3,3,3,2,2,2,1").unwrap();
    let rg = realization_graph(&d, &lim()).unwrap();
    let mut g = rg.realization(0);
    let mut seen = vec![false; rg.len()];
    for _ in 0..20_000 {
        let i = rg.index_of(&g).unwrap();
        seen[i] = true;
        let switches = two_switches(&g);
        let s = switches.choose(&mut rng).unwrap();
        let next = apply_two_switch(&g, s).unwrap();
        let j = rg.index_of(&next).unwrap();
        assert!(rg.meta_edges().binary_search(&(i.min(j), i.max(j))).is_ok());
        g = next;
    }
    assert!(seen.iter().filter(|&&s| s).count() > rg.len() / 2);
}

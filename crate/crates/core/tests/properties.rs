mod common;

use proptest::prelude::*;
use switchlab::graph::{cartesian_product_all, is_isomorphic, LabeledGraph};
use switchlab::realizer::{apply_two_switch, realization_graph, two_switches, RealizationGraph};
use switchlab::sequence::{complement_sequence, is_graphical_terms, split_partition_index};
use switchlab::{
    canonical_decomposition_graph, canonical_decomposition_seq, compose_sequences, parse_sequence, parse_splitted,
    recompose, DegreeSequence, Limits, SplittedSequence,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut g = LabeledGraph::new(n);
            for ((u, v), b) in common::pairs(n).into_iter().zip(bits) {
                if b {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

fn arb_sequence(max_n: usize) -> impl Strategy<Value = DegreeSequence> {
    arb_graph(max_n).prop_map(|g| g.degree_sequence())
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Splitted sequence read off a random split graph with clique `0..k`.
fn arb_splitted(max_n: usize) -> impl Strategy<Value = SplittedSequence> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n, proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, k, bits)| {
            let mut g = LabeledGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if v < k || (u < k && bits[u * n + v]) {
                        g.add_edge(u, v);
                    }
                }
            }
            let deg = g.degrees();
            SplittedSequence::new(deg[..k].to_vec(), deg[k..].to_vec()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graphicality_matches_havel_hakimi(terms in proptest::collection::vec(0usize..9, 0..9)) {
        prop_assert_eq!(is_graphical_terms(&terms), common::havel_hakimi(&terms));
    }

    #[test]
    fn sequence_text_round_trips(d in arb_sequence(9)) {
        prop_assert_eq!(parse_sequence(&d.to_text()).unwrap(), d.clone());
        prop_assert_eq!(parse_sequence(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn splitted_text_round_trips(s in arb_splitted(8)) {
        prop_assert_eq!(parse_splitted(&s.to_text()).unwrap(), s.clone());
        prop_assert_eq!(parse_splitted(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn complement_is_an_involution(d in arb_sequence(9)) {
        let co = complement_sequence(&d);
        prop_assert!(is_graphical_terms(co.terms()));
        prop_assert_eq!(complement_sequence(&co), d);
    }

    #[test]
    fn split_index_is_at_most_length(d in arb_sequence(9)) {
        let q = split_partition_index(&d);
        prop_assert!(q >= 1 && q <= d.len());
        prop_assert!(d.terms()[q - 1] + 2 > q);
    }

    #[test]
    fn decomposition_recomposes(d in arb_sequence(9)) {
        let dec = canonical_decomposition_seq(&d).unwrap();
        prop_assert_eq!(recompose(&dec).unwrap(), d.clone());
        let total: usize = dec.components.iter().map(SplittedSequence::len).sum::<usize>() + dec.tail.len();
        prop_assert_eq!(total, d.len());
    }

    #[test]
    fn composition_is_decomposed_back(alpha in arb_splitted(5), q in arb_sequence(5)) {
        let d = compose_sequences(&alpha, &q).unwrap();
        prop_assert_eq!(d.len(), alpha.len() + q.len());
        prop_assert_eq!(d.sum(), alpha.clique_terms().iter().sum::<usize>() + alpha.indep_terms().iter().sum::<usize>()
            + q.sum() + 2 * alpha.clique_terms().len() * q.len());
        let dq = canonical_decomposition_seq(&q).unwrap();
        let dd = canonical_decomposition_seq(&d).unwrap();
        prop_assert!(!dd.components.is_empty());
        prop_assert!(dd.components.ends_with(&dq.components));
        prop_assert_eq!(dd.tail, dq.tail);
    }

    #[test]
    fn graph_decomposition_recomposes(g in arb_graph(9)) {
        let dec = canonical_decomposition_graph(&g).unwrap();
        prop_assert_eq!(dec.recompose().unwrap(), g);
    }

    #[test]
    fn two_switches_preserve_degrees(g in arb_graph(9)) {
        for s in two_switches(&g) {
            let h = apply_two_switch(&g, &s).unwrap();
            prop_assert_eq!(h.degrees(), g.degrees());
            prop_assert_eq!(h.edge_count(), g.edge_count());
            prop_assert_eq!(apply_two_switch(&h, &s.inverse()).unwrap(), g.clone());
        }
    }

    #[test]
    fn isomorphism_ignores_labels((g, perm) in arb_graph(10).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_permutation(n))
    })) {
        let h = g.relabel(&perm);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&g.complement(), &h.complement()));
    }

    #[test]
    fn product_counts(a in arb_graph(5), b in arb_graph(5)) {
        let p = cartesian_product_all([&a, &b]);
        prop_assert_eq!(p.n(), a.n() * b.n());
        prop_assert_eq!(p.edge_count(), a.edge_count() * b.n() + b.edge_count() * a.n());
        prop_assert!(is_isomorphic(&p, &b.cartesian_product(&a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn realization_graph_invariants(d in arb_sequence(7)) {
        let limits = Limits::default();
        let rg = realization_graph(&d, &limits).unwrap();
        let g = rg.graph();
        prop_assert!(g.is_connected());
        for (i, r) in rg.realizations().enumerate() {
            prop_assert_eq!(r.degrees(), d.terms());
            prop_assert_eq!(rg.index_of(&r), Some(i));
        }
        let co = realization_graph(&complement_sequence(&d), &limits).unwrap().graph();
        prop_assert!(is_isomorphic(&g, &co));
        let padded = realization_graph(&d.with_appended_zero(), &limits).unwrap().graph();
        prop_assert!(is_isomorphic(&g, &padded));
    }

    #[test]
    fn realization_graph_json_round_trips(d in arb_sequence(6)) {
        let rg = realization_graph(&d, &Limits::default()).unwrap();
        let text = serde_json::to_string(&rg.to_json()).unwrap();
        let back = RealizationGraph::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &rg);
        prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
    }
}

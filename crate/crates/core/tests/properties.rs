use std::collections::HashMap;

use hyperfect::canon::{canonical_form, find_isomorphism};
use hyperfect::certificate::{Verdict, Witness};
use hyperfect::classify::{check_implications, classify, is_h_omega_perfect, is_h_perfect, voloshin_upper_chromatic};
use hyperfect::clique::{clique_number, independence_number};
use hyperfect::cocycle::{co, is_cocycle, link_graph_plus, seidel_switch};
use hyperfect::coloring::{
    compose_berge_coloring, is_berge, is_c_alpha_perfect, is_c_omega_perfect, is_proper, restricts_properly,
    search_coloring,
};
use hyperfect::extremal::{clique_hypergraph, cone, disjoint_union};
use hyperfect::khg::{parse_khg, to_khg};
use hyperfect::{Graph, KHypergraph, VertexSet};
use proptest::prelude::*;

fn hypergraph(k: usize, max_n: usize) -> impl Strategy<Value = KHypergraph> {
    (k..=max_n).prop_flat_map(move |n| {
        let slots = hyperfect::vertex_set::binomial(n, k) as usize;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u64, |m, (i, &b)| m | (u64::from(b) << i));
            KHypergraph::from_rank_mask(k, n, mask).unwrap()
        })
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    hypergraph(2, max_n).prop_map(|h| Graph::from_hypergraph(h).unwrap())
}

fn subset(n: usize) -> impl Strategy<Value = VertexSet> {
    any::<u64>().prop_map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn with_subset(k: usize, max_n: usize) -> impl Strategy<Value = (KHypergraph, VertexSet)> {
    hypergraph(k, max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), subset(n))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in hypergraph(3, 8)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.complement().edge_count() + g.edge_count(), g.slot_count() as usize);
    }

    #[test]
    fn induced_commutes_with_complement((g, x) in with_subset(3, 8)) {
        prop_assert_eq!(g.induced(x).unwrap().complement(), g.complement().induced(x).unwrap());
    }

    #[test]
    fn link_of_complement((g, x) in with_subset(4, 7)) {
        prop_assume!(x.len() <= 2);
        prop_assert_eq!(g.complement().link(x).unwrap(), g.link(x).unwrap().complement());
    }

    #[test]
    fn clique_number_is_monotone((g, x) in with_subset(3, 8)) {
        let sub = g.induced(x).unwrap();
        prop_assert!(clique_number(&sub) <= clique_number(&g));
        prop_assert!(independence_number(&sub) <= independence_number(&g));
    }

    #[test]
    fn canonical_form_is_label_free((g, p) in hypergraph(3, 7).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.relabel(&p);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let iso = find_isomorphism(&g, &h).expect("relabeled copy");
        prop_assert_eq!(g.relabel(&iso), h);
    }

    #[test]
    fn canonical_form_separates_classes(a in hypergraph(3, 6), b in hypergraph(3, 6)) {
        prop_assume!(a.n() == b.n());
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), find_isomorphism(&a, &b).is_some());
    }

    #[test]
    fn khg_round_trip(g in prop_oneof![hypergraph(2, 9), hypergraph(3, 8), hypergraph(4, 7)]) {
        prop_assert_eq!(parse_khg(&to_khg(&g)).unwrap(), g);
    }

    #[test]
    fn cocycle_identities((g, x) in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), subset(n)) })) {
        let h = co(&g);
        prop_assert_eq!(h.complement(), co(&g.complement()));
        prop_assert_eq!(h.induced(x).unwrap(), co(&g.induced(x).unwrap()));
        prop_assert_eq!(co(&seidel_switch(&g, x).unwrap()), h.clone());
        for v in 0..g.n() {
            let plus = link_graph_plus(&g, v).unwrap();
            prop_assert_eq!(plus.as_hypergraph(), &h.link(VertexSet::singleton(v)).unwrap());
        }
        prop_assert!(is_cocycle(&h).unwrap().is_true());
    }

    #[test]
    fn composed_berge_colorings_are_proper(g in prop_oneof![hypergraph(3, 6), hypergraph(4, 6)]) {
        let k = g.k();
        let t = clique_number(&g) + 2 - k;
        let mut per_y = HashMap::new();
        for y in g.vertices().subsets_of_size(k - 2) {
            match search_coloring(&g, y, t).unwrap() {
                Some(c) => { per_y.insert(y, c); }
                None => return Ok(()),
            }
        }
        for x in (0..=k - 2).flat_map(|s| g.vertices().subsets_of_size(s)) {
            let c = compose_berge_coloring(&g, x, &per_y).unwrap();
            prop_assert!(is_proper(&g, &c).unwrap());
            prop_assert!(restricts_properly(&g, x, &c).unwrap());
        }
    }

    #[test]
    fn negative_verdicts_carry_checkable_witnesses(g in hypergraph(3, 6)) {
        for cert in [is_berge(&g), is_c_omega_perfect(&g)] {
            if cert.verdict != Verdict::Fails {
                continue;
            }
            match cert.witness {
                Witness::NoColoring { vertices, x, colors } => {
                    let sub = g.induced(vertices).unwrap();
                    prop_assert_eq!(colors, clique_number(&sub) + 2 - g.k());
                    prop_assert!(search_coloring(&sub, x.compress(vertices), colors).unwrap().is_none());
                }
                other => prop_assert!(false, "unexpected witness {:?}", other),
            }
        }
    }

    #[test]
    fn reports_satisfy_the_implications(g in hypergraph(3, 6)) {
        let r = classify(&g, &[1, 2, 3]).unwrap();
        prop_assert!(check_implications(&r).is_ok());
        if r.verdict("doubly") == Some(Verdict::Holds) {
            prop_assert!(is_cocycle(&g).unwrap().is_true());
        }
    }

    #[test]
    fn berge_matches_c_omega(g in prop_oneof![hypergraph(3, 6), hypergraph(4, 6)]) {
        prop_assert_eq!(is_berge(&g).verdict, is_c_omega_perfect(&g).verdict);
    }

    #[test]
    fn upper_chromatic_at_most_alpha(g in hypergraph(3, 7)) {
        prop_assert!(voloshin_upper_chromatic(&g) <= independence_number(&g));
    }

    #[test]
    fn cones_keep_h_perfect(a in prop_oneof![hypergraph(2, 7), hypergraph(3, 6)]) {
        let c = cone(&a).unwrap();
        prop_assert_eq!(is_h_perfect(&c).verdict, is_h_perfect(&a).verdict);
        // a K_{k+1}^k in the base becomes k + 1 edges on k + 2 vertices
        let expected = is_h_omega_perfect(&a).is_true() && clique_number(&a) <= a.k();
        prop_assert_eq!(is_h_omega_perfect(&c).is_true(), expected);
    }

    #[test]
    fn unions_keep_h_omega(a in hypergraph(3, 5), b in hypergraph(3, 4)) {
        prop_assume!(is_h_omega_perfect(&a).is_true() && is_h_omega_perfect(&b).is_true());
        prop_assert!(is_h_omega_perfect(&disjoint_union(&a, &b).unwrap()).is_true());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clique_hypergraphs_of_perfect_graphs(g in graph(8)) {
        use hyperfect::graph_perfect::{is_graph_perfect, PerfectnessMethod};
        prop_assume!(is_graph_perfect(&g, PerfectnessMethod::HoleScan).is_true());
        let h = clique_hypergraph(g.as_hypergraph(), 3).unwrap();
        prop_assert!(is_h_omega_perfect(&h).is_true());
    }

    #[test]
    fn doubly_perfect_is_symmetric(g in hypergraph(3, 6)) {
        prop_assert_eq!(is_c_alpha_perfect(&g).verdict, is_c_omega_perfect(&g.complement()).verdict);
        prop_assert_eq!(is_c_alpha_perfect(&g.complement()).verdict, is_c_omega_perfect(&g).verdict);
    }
}

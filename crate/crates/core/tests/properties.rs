use proptest::prelude::*;

use eclab::{
    are_isomorphic, brute_force_ec, edge_coalition_number, edge_coalition_number_with,
    enumerate_corpus, forms_edge_coalition, is_edge_dominating_set, is_singleton_ec_graph,
    CorpusSpec, EdgeSet, Graph, GraphClass, Justification, SolverConfig,
};

/// Graphs on up to `max_n` vertices with every possible edge set.
fn graphs(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let k = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), k),
            )
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = pairs
                .into_iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(p, _)| p);
            Graph::new(n, edges).unwrap()
        })
        .prop_filter("edge budget", move |g| g.m() <= max_m)
}

fn nonempty(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n, max_m).prop_filter("needs an edge", |g| g.m() > 0)
}

fn subset(m: usize) -> impl Strategy<Value = EdgeSet> {
    proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
        EdgeSet::from_indices(
            m,
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i),
        )
        .unwrap()
    })
}

fn graph_and_two_sets(max_n: usize) -> impl Strategy<Value = (Graph, EdgeSet, EdgeSet)> {
    nonempty(max_n, 64).prop_flat_map(|g| {
        let m = g.m();
        (Just(g), subset(m), subset(m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_neighbourhoods_are_symmetric(g in nonempty(8, 64)) {
        for e in 0..g.m() {
            let ne = g.edge_neighborhood(e).unwrap();
            prop_assert!(!ne.neighbors.contains(e));
            for f in ne.neighbors.iter() {
                prop_assert!(g.edge_neighborhood(f).unwrap().neighbors.contains(e));
            }
            let (u, v) = g.edges()[e];
            prop_assert_eq!(ne.degree(), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn line_graph_counts(g in graphs(8, 64)) {
        let l = g.line_graph();
        prop_assert_eq!(l.n(), g.m());
        let expected: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(l.m(), expected);
    }

    #[test]
    fn isomorphic_under_relabelling(g in graphs(8, 64), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in graphs(8, 64)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn domination_is_monotone((g, a, b) in graph_and_two_sets(7)) {
        if is_edge_dominating_set(&g, &a).unwrap() {
            prop_assert!(is_edge_dominating_set(&g, &a.union(&b)).unwrap());
        }
    }

    #[test]
    fn coalition_is_symmetric((g, a, b) in graph_and_two_sets(7)) {
        let b = b.difference(&a);
        if a.is_empty() || b.is_empty() {
            return Ok(());
        }
        prop_assert_eq!(
            forms_edge_coalition(&g, &a, &b).unwrap(),
            forms_edge_coalition(&g, &b, &a).unwrap()
        );
    }

    #[test]
    fn solver_matches_oracle(g in nonempty(7, 8)) {
        let r = edge_coalition_number(&g).unwrap();
        prop_assert_eq!(r.ec, brute_force_ec(&g).unwrap());
        prop_assert!(1 <= r.ec && r.ec <= g.m());
        prop_assert_eq!(r.ec == g.m(), is_singleton_ec_graph(&g));
    }

    #[test]
    fn certificates_verify_from_scratch(g in nonempty(7, 12)) {
        let cert = edge_coalition_number(&g).unwrap().certificate;
        let blocks = cert.partition.blocks();
        let mut union = EdgeSet::empty(g.m());
        for (i, b) in blocks.iter().enumerate() {
            prop_assert!(!b.is_empty());
            prop_assert!(union.is_disjoint(b));
            union = union.union(b);
            match cert.justification[i] {
                Justification::FullEdge => {
                    prop_assert_eq!(b.len(), 1);
                    prop_assert!(is_edge_dominating_set(&g, b).unwrap());
                }
                Justification::Partner { with } => {
                    prop_assert_ne!(with, i);
                    prop_assert!(!is_edge_dominating_set(&g, b).unwrap());
                    prop_assert!(!is_edge_dominating_set(&g, &blocks[with]).unwrap());
                    prop_assert!(is_edge_dominating_set(&g, &b.union(&blocks[with])).unwrap());
                }
            }
        }
        prop_assert_eq!(union.len(), g.m());
    }

    #[test]
    fn parallel_value_matches_sequential(g in nonempty(7, 12)) {
        let seq = edge_coalition_number(&g).unwrap();
        let par = edge_coalition_number_with(&g, &SolverConfig::default().with_jobs(3)).unwrap();
        prop_assert_eq!(seq.ec, par.ec);
        prop_assert!(par.certificate.verify(&g).is_ok());
    }
}

#[test]
fn corpus_is_deterministic() {
    let spec = CorpusSpec::new(
        6,
        &[GraphClass::All, GraphClass::Trees, GraphClass::Unicyclic],
    );
    assert_eq!(
        enumerate_corpus(&spec).unwrap(),
        enumerate_corpus(&spec).unwrap()
    );
}

use std::collections::BTreeSet;

use proptest::prelude::*;

use rainbow_kernels::checks::check_theorem2_hypothesis;
use rainbow_kernels::digraph::{
    induced_subdigraph, is_strongly_connected, strongly_connected_components,
};
use rainbow_kernels::kernels::{kernel_of, pcp_kernel_tournament, rainbow_closure, rainbow_kernel};
use rainbow_kernels::reachability::{rainbow_reachable, rainbow_reachable_bruteforce};
use rainbow_kernels::reductions::{
    build_dh, build_td, check_td_structure, parse_hypergraph, parse_rpog, serialize_hypergraph,
    serialize_rpog, Hypergraph3, RpogInstance,
};
use rainbow_kernels::{
    parse_digraph, parse_tournament, rainbow_kernel_tournament, serialize_digraph,
    serialize_tournament, validate_tournament, ColoredDigraph, Tournament,
};

fn digraph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = ColoredDigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, 0..max_m), 0..=n * n).prop_map(move |raw| {
            let mut seen = BTreeSet::new();
            let arcs: Vec<_> = raw
                .into_iter()
                .filter(|&(t, h, _)| t != h && seen.insert((t, h)))
                .collect();
            ColoredDigraph::densified(n, arcs).unwrap()
        })
    })
}

fn tournament_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = Tournament> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec((any::<bool>(), 0..max_m), pairs).prop_map(move |choices| {
            let mut arcs = Vec::new();
            let mut it = choices.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    let (forward, c) = it.next().unwrap();
                    arcs.push(if forward { (u, v, c) } else { (v, u, c) });
                }
            }
            validate_tournament(ColoredDigraph::densified(n, arcs).unwrap()).unwrap()
        })
    })
}

fn hypergraph_strategy() -> impl Strategy<Value = Hypergraph3> {
    (1..=2usize).prop_flat_map(|n| {
        prop::collection::btree_set(
            prop::sample::subsequence((1..=3 * n).collect::<Vec<_>>(), 3),
            1..=3,
        )
        .prop_map(move |edges| {
            Hypergraph3::new(n, edges.into_iter().map(|e| [e[0], e[1], e[2]]).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn digraph_text_round_trip(d in digraph_strategy(8, 5)) {
        let text = serialize_digraph(&d);
        prop_assert_eq!(parse_digraph(&text).unwrap(), d);
    }

    #[test]
    fn tournament_text_round_trip(t in tournament_strategy(8, 4)) {
        let text = serialize_tournament(&t);
        prop_assert_eq!(parse_tournament(&text).unwrap(), t);
    }

    #[test]
    fn hypergraph_and_rpog_round_trip(h in hypergraph_strategy()) {
        prop_assert_eq!(parse_hypergraph(&serialize_hypergraph(&h)).unwrap(), h.clone());
        let r = build_dh(&h);
        prop_assert_eq!(parse_rpog(&serialize_rpog(&r)).unwrap(), r);
    }

    #[test]
    fn components_partition_and_respect_order(d in digraph_strategy(9, 3)) {
        let comps = strongly_connected_components(&d);
        let mut position = vec![usize::MAX; d.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                prop_assert_eq!(position[v], usize::MAX);
                position[v] = i;
            }
            let (sub, _) = induced_subdigraph(&d, c).unwrap();
            prop_assert!(is_strongly_connected(&sub));
        }
        prop_assert!(position.iter().all(|&p| p != usize::MAX));
        for a in d.arcs() {
            prop_assert!(position[a.tail] <= position[a.head]);
        }
    }

    #[test]
    fn rainbow_engine_matches_oracle(d in digraph_strategy(6, 4)) {
        for u in d.vertices() {
            for v in d.vertices() {
                if u == v {
                    continue;
                }
                let engine = rainbow_reachable(&d, u, v);
                let oracle = rainbow_reachable_bruteforce(&d, u, v).unwrap();
                prop_assert_eq!(engine.is_some(), oracle.is_some());
                if let Some(p) = engine {
                    prop_assert!(p.validate(&d).is_ok());
                }
            }
        }
    }

    #[test]
    fn rainbow_kernels_validate(d in digraph_strategy(7, 3)) {
        if let Some(cert) = rainbow_kernel(&d).unwrap() {
            prop_assert!(cert.validate_rainbow(&d).is_ok());
            let closure = kernel_of(&rainbow_closure(&d)).unwrap().unwrap();
            prop_assert_eq!(&closure.kernel, &cert.kernel);
            prop_assert!(closure.validate_closure(&rainbow_closure(&d)).is_ok());
        }
    }

    #[test]
    fn tournament_kernel_is_good_vertex(t in tournament_strategy(7, 4)) {
        let good = rainbow_kernel_tournament(&t);
        let general = rainbow_kernel(&t).unwrap().map(|c| c.kernel);
        prop_assert_eq!(general, good.map(|v| vec![v]));
        if let Some(k) = pcp_kernel_tournament(&t) {
            prop_assert!(k < t.n());
        }
    }

    #[test]
    fn hypothesis_implies_kernel(t in tournament_strategy(7, 21)) {
        if check_theorem2_hypothesis(&t).unwrap().satisfied {
            prop_assert!(rainbow_kernel_tournament(&t).is_some());
        }
    }

    #[test]
    fn td_is_a_tournament_over_d(d in digraph_strategy(6, 3), x in 0..6usize, y in 0..6usize) {
        let oriented = d.is_oriented() && x < d.n() && y < d.n() && x != y;
        if oriented {
            let r = RpogInstance::new(d.clone(), x, y).unwrap();
            let g = build_td(&r);
            prop_assert_eq!(g.tournament.n(), d.n() + 4);
            prop_assert_eq!(g.tournament.m(), d.m() + 4);
            prop_assert!(check_td_structure(&r, &g).is_ok());
            let path = rainbow_reachable(&d, x, y).is_some();
            prop_assert_eq!(rainbow_kernel_tournament(&g.tournament).is_some(), path);
        }
    }
}

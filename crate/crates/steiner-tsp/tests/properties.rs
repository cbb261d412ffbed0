//! Property tests for the structural invariants: metric axioms, disjoint
//! paths on biconnected graphs, connectivity thresholds, subset statistics
//! against naive enumeration, and spanning-tree parity.

use std::collections::BTreeSet;

use proptest::prelude::*;

use steiner_tsp::spanning::{build_spanning_tree, TreeStrategy};
use steiner_tsp::{shortest_path_metric, Graph, Sigma2};

/// Random connected graph: a random recursive tree plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(any::<u64>(), n - 1),
            prop::collection::vec((0..n, 0..n), 0..=3 * n),
        )
            .prop_map(|(n, parents, extra)| {
                let mut edges: Vec<(usize, usize)> =
                    (1..n).map(|i| ((parents[i - 1] as usize) % i, i)).collect();
                for (a, b) in extra {
                    if a != b {
                        edges.push((a, b));
                    }
                }
                Graph::from_edge_list(n, &edges).expect("valid edges")
            })
    })
}

fn naive_sigma2(g: &Graph, x: &BTreeSet<usize>) -> Option<usize> {
    let xs: Vec<usize> = x.iter().copied().collect();
    let mut best = None;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if !g.has_edge(xs[i], xs[j]) {
                let sum = g.degree(xs[i]) + g.degree(xs[j]);
                best = Some(best.map_or(sum, |b: usize| b.min(sum)));
            }
        }
    }
    best
}

fn naive_alpha(g: &Graph, x: &BTreeSet<usize>) -> usize {
    let xs: Vec<usize> = x.iter().copied().collect();
    let mut best = 0;
    for mask in 0u32..(1 << xs.len()) {
        let picked: Vec<usize> = (0..xs.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| xs[i])
            .collect();
        let independent = picked
            .iter()
            .enumerate()
            .all(|(i, &u)| picked[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if independent {
            best = best.max(picked.len());
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metric_axioms(g in connected_graph(10)) {
        let n = g.vertex_count();
        let m = shortest_path_metric(&g).unwrap();
        for u in 0..n {
            prop_assert_eq!(m.dist(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(m.dist(u, v), m.dist(v, u));
                prop_assert_eq!(m.dist(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(m.dist(u, w) <= m.dist(u, v) + m.dist(v, w));
                }
            }
        }
    }

    #[test]
    fn menger_pairs_on_biconnected_graphs(g in connected_graph(9)) {
        prop_assume!(g.is_biconnected());
        let n = g.vertex_count();
        for s in 0..n {
            for t in s + 1..n {
                if g.has_edge(s, t) {
                    continue;
                }
                let paths = g.two_disjoint_paths(s, t);
                prop_assert!(paths.is_ok(), "pair ({s},{t}) has no disjoint paths");
                let cyc = paths.unwrap().cycle();
                let uniq: BTreeSet<usize> = cyc.iter().copied().collect();
                prop_assert_eq!(uniq.len(), cyc.len());
            }
        }
    }

    #[test]
    fn biconnectivity_iff_connectivity_at_least_two(g in connected_graph(9)) {
        let bic = g.is_biconnected();
        let kappa = g.vertex_connectivity().unwrap();
        prop_assert_eq!(bic, kappa >= 2);
    }

    #[test]
    fn subset_stats_match_naive(g in connected_graph(8), picks in prop::collection::btree_set(0usize..8, 1..=6)) {
        let x: BTreeSet<usize> = picks.into_iter().filter(|&v| v < g.vertex_count()).collect();
        prop_assume!(!x.is_empty());
        let sigma = g.sigma2(&x);
        match naive_sigma2(&g, &x) {
            Some(v) => prop_assert_eq!(sigma, Sigma2::Finite(v)),
            None => prop_assert_eq!(sigma, Sigma2::Infinite),
        }
        prop_assert_eq!(g.subset_independence_number(&x).unwrap(), naive_alpha(&g, &x));
    }

    #[test]
    fn spanning_trees_are_valid_with_even_odd_sets(g in connected_graph(10), seed in any::<u64>()) {
        for strat in TreeStrategy::ALL {
            let t = build_spanning_tree(&g, strat, seed).unwrap();
            prop_assert_eq!(t.edges().len(), g.vertex_count() - 1);
            for &(u, v) in t.edges() {
                prop_assert!(g.has_edge(u, v));
            }
            prop_assert_eq!(t.odd_set().len() % 2, 0);
            prop_assert!(t.odd_set().len() <= 2 * (t.leaf_count() - 1));
            for v in 0..g.vertex_count() {
                prop_assert_eq!(t.odd_set().contains(&v), t.degree(v) % 2 == 1);
            }
        }
    }

    #[test]
    fn few_odd_never_worse(g in connected_graph(10), seed in any::<u64>()) {
        let random = build_spanning_tree(&g, TreeStrategy::Random, seed).unwrap();
        let few = build_spanning_tree(&g, TreeStrategy::FewOdd, seed).unwrap();
        prop_assert!(few.odd_set().len() <= random.odd_set().len());
    }

    #[test]
    fn graph_io_round_trip(g in connected_graph(12)) {
        let text = steiner_tsp::io::write_graph(&g);
        let back = steiner_tsp::io::read_graph(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn predicates_are_sound(g in connected_graph(8), picks in prop::collection::btree_set(0usize..8, 1..=5)) {
        prop_assume!(g.is_biconnected());
        let x: BTreeSet<usize> = picks.into_iter().filter(|&v| v < g.vertex_count()).collect();
        prop_assume!(!x.is_empty());
        let flags = steiner_tsp::cyclability_predicates(&g, &x).unwrap();
        if flags.any() {
            prop_assert!(steiner_tsp::oracle::is_cyclable(&g, &x).unwrap());
        }
    }

    #[test]
    fn steiner_dispatch_agrees_with_oracle(g in connected_graph(8), picks in prop::collection::btree_set(0usize..8, 1..=5)) {
        prop_assume!(g.is_biconnected());
        let x: BTreeSet<usize> = picks.into_iter().filter(|&v| v < g.vertex_count()).collect();
        prop_assume!(!x.is_empty());
        let dispatched = steiner_tsp::find_steiner_cycle(&g, &x, 18);
        let oracle_says = steiner_tsp::oracle::is_cyclable(&g, &x).unwrap();
        match dispatched {
            Ok(cycle) => {
                prop_assert!(oracle_says);
                prop_assert!(cycle.is_simple());
                for &v in &x {
                    prop_assert!(cycle.walk().contains(v));
                }
            }
            Err(steiner_tsp::Error::NotFound(_)) => prop_assert!(!oracle_says),
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error {e}"))),
        }
    }
}

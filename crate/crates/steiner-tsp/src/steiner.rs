//! Steiner cycles: simple or approximate closed walks through a required
//! vertex set, plus the sufficient-condition predicates for cyclability.
//!
//! `find_steiner_cycle` dispatches by required-set size: a pair is handled by
//! disjoint paths, a set no larger than the vertex connectivity by cycle
//! augmentation, and anything else by exhaustive search at desk scale. Ratios
//! beta and gamma are kept as exact rationals so that bound certificates stay
//! exact.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{Error, NotFoundReason, Result};
use crate::flow;
use crate::graph::{shortest_path_metric, Graph, Metric};
use crate::oracle;
use crate::Rational;

/// A closed walk in a host graph: consecutive entries (and the wrap-around
/// pair) are edges. The walk is stored without repeating the first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    seq: Vec<usize>,
    unique: usize,
}

impl ClosedWalk {
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::BadParameter(format!(
                "closed walks need length >= 3, got {}",
                seq.len()
            )));
        }
        let n = g.vertex_count();
        for &v in &seq {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
        }
        for i in 0..seq.len() {
            let u = seq[i];
            let w = seq[(i + 1) % seq.len()];
            if u == w || !g.has_edge(u, w) {
                return Err(Error::BadParameter(format!(
                    "walk step ({u},{w}) is not an edge"
                )));
            }
        }
        let unique = seq.iter().collect::<BTreeSet<_>>().len();
        Ok(Self { seq, unique })
    }

    /// Walk length l(C): the number of traversed edges.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 3 by construction
    }

    /// Number of distinct vertices |C|.
    pub fn unique_count(&self) -> usize {
        self.unique
    }

    pub fn is_simple(&self) -> bool {
        self.unique == self.seq.len()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.seq.iter().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.seq.contains(&v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStats {
    pub unique: usize,
    pub length: usize,
    pub beta: Rational,
}

/// |C|, l(C), and beta = l(C)/|C| for a closed walk.
pub fn walk_stats(w: &ClosedWalk) -> WalkStats {
    WalkStats {
        unique: w.unique_count(),
        length: w.len(),
        beta: Rational::new(w.len() as i64, w.unique_count() as i64),
    }
}

/// A closed walk through a required vertex set, with its exact relative
/// length beta = l(C)/|C| and gamma = beta - 1. Simple iff gamma = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerCycle {
    walk: ClosedWalk,
    required: BTreeSet<usize>,
    beta: Rational,
    gamma: Rational,
}

impl SteinerCycle {
    pub fn new(walk: ClosedWalk, required: BTreeSet<usize>) -> Result<Self> {
        for &v in &required {
            if !walk.contains(v) {
                return Err(Error::RequiredNotOnCycle(v));
            }
        }
        let beta = Rational::new(walk.len() as i64, walk.unique_count() as i64);
        let gamma = beta - Rational::one();
        Ok(Self {
            walk,
            required,
            beta,
            gamma,
        })
    }

    pub fn walk(&self) -> &ClosedWalk {
        &self.walk
    }

    pub fn required(&self) -> &BTreeSet<usize> {
        &self.required
    }

    pub fn beta(&self) -> Rational {
        self.beta
    }

    pub fn gamma(&self) -> Rational {
        self.gamma
    }

    pub fn is_simple(&self) -> bool {
        self.walk.is_simple()
    }
}

/// Outcome flags of the three cyclability sufficient conditions for a set
/// `x` in a biconnected graph. Any true flag certifies that a simple cycle
/// through `x` exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclabilityFlags {
    /// |x| <= kappa(G).
    pub dirac: bool,
    /// sigma_2(x) >= n (a clique counts as satisfied).
    pub shi: bool,
    /// alpha(x) <= kappa(G).
    pub fournier: bool,
}

impl CyclabilityFlags {
    pub fn any(&self) -> bool {
        self.dirac || self.shi || self.fournier
    }
}

pub fn cyclability_predicates(g: &Graph, x: &BTreeSet<usize>) -> Result<CyclabilityFlags> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let kappa = g.vertex_connectivity()?;
    let alpha = g.subset_independence_number(x)?;
    Ok(CyclabilityFlags {
        dirac: x.len() <= kappa,
        shi: g.sigma2(x).at_least(g.vertex_count()),
        fournier: alpha <= kappa,
    })
}

/// Default vertex-count ceiling for the exhaustive cycle search.
pub const DEFAULT_EXHAUSTIVE_BUDGET: usize = 18;

/// Finds a simple cycle through `s`, dispatching in order: disjoint paths
/// for |s| <= 2, cycle augmentation for |s| <= kappa(G), exhaustive search
/// for n within `exhaustive_budget`. `Err(NotFound(ProvenAbsent))` means the
/// exhaustive search completed and no simple cycle through `s` exists;
/// `Err(NotFound(Budget))` means no method applied.
pub fn find_steiner_cycle(
    g: &Graph,
    s: &BTreeSet<usize>,
    exhaustive_budget: usize,
) -> Result<SteinerCycle> {
    if s.is_empty() {
        return Err(Error::BadParameter("required set is empty".into()));
    }
    let n = g.vertex_count();
    for &v in s {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
    }
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    if s.len() <= 2 {
        return menger_cycle(g, s);
    }
    let kappa = g.vertex_connectivity()?;
    if s.len() <= kappa {
        match dirac_cycle(g, s) {
            Ok(cycle) => return Ok(cycle),
            Err(Error::AugmentationStuck) => {} // fall through to exhaustive search
            Err(e) => return Err(e),
        }
    }
    if n <= exhaustive_budget {
        match oracle::brute_force_steiner_cycle(g, s, exhaustive_budget)? {
            oracle::CycleSearch::Found(cycle) => Ok(cycle),
            oracle::CycleSearch::ProvenAbsent => Err(Error::NotFound(NotFoundReason::ProvenAbsent)),
        }
    } else {
        Err(Error::NotFound(NotFoundReason::Budget))
    }
}

/// Simple cycle through one or two required vertices via disjoint paths.
fn menger_cycle(g: &Graph, s: &BTreeSet<usize>) -> Result<SteinerCycle> {
    let mut it = s.iter();
    let a = *it.next().expect("non-empty");
    let cycle_seq = match it.next() {
        Some(&b) => g.two_disjoint_paths(a, b)?.cycle(),
        None => {
            let b = *g
                .neighbors(a)
                .first()
                .ok_or(Error::NotTwoConnectedBetween { s: a, t: a })?;
            g.two_disjoint_paths(a, b)?.cycle()
        }
    };
    let walk = ClosedWalk::new(g, cycle_seq)?;
    SteinerCycle::new(walk, s.clone())
}

/// Simple cycle through `x` when |x| <= kappa(G), by augmentation: start from
/// a cycle through two vertices of `x`; while some v in `x` is off the cycle,
/// grow a fan of vertex-disjoint paths from v to the cycle and reroute one
/// arc through v so that no on-cycle vertex of `x` is evicted. Among feasible
/// reroutes the one maximizing the new cycle length wins.
pub fn dirac_cycle(g: &Graph, x: &BTreeSet<usize>) -> Result<SteinerCycle> {
    if x.is_empty() {
        return Err(Error::BadParameter("required set is empty".into()));
    }
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let kappa = g.vertex_connectivity()?;
    if x.len() > kappa {
        return Err(Error::PreconditionViolated(format!(
            "|x| = {} exceeds vertex connectivity {kappa}",
            x.len()
        )));
    }
    let xs: Vec<usize> = x.iter().copied().collect();
    let mut cyc = if xs.len() >= 2 {
        g.two_disjoint_paths(xs[0], xs[1])?.cycle()
    } else {
        let b = g.neighbors(xs[0])[0];
        g.two_disjoint_paths(xs[0], b)?.cycle()
    };
    loop {
        let on: BTreeSet<usize> = cyc.iter().copied().collect();
        let Some(&v) = xs.iter().find(|&&v| !on.contains(&v)) else {
            break;
        };
        let targets: Vec<usize> = cyc.clone();
        let fan = flow::fan_paths(g, v, &targets);
        if fan.len() < 2 {
            return Err(Error::AugmentationStuck);
        }
        let pos_of = |u: usize| {
            cyc.iter()
                .position(|&w| w == u)
                .expect("fan endpoint on cycle")
        };
        let mut best: Option<Vec<usize>> = None;
        for i in 0..fan.len() {
            for j in 0..fan.len() {
                if i == j {
                    continue;
                }
                let (pi, pj) = (
                    pos_of(*fan[i].last().unwrap()),
                    pos_of(*fan[j].last().unwrap()),
                );
                // Replace the forward arc pi -> pj (interior exclusive) by
                // the detour through v, provided the evicted interior holds
                // no required vertex.
                let len = cyc.len();
                let interior_len = (pj + len - pi - 1) % len;
                let evicts_required = (1..=interior_len).any(|k| x.contains(&cyc[(pi + k) % len]));
                if evicts_required {
                    continue;
                }
                let mut cand = Vec::with_capacity(len - interior_len + fan[i].len() + fan[j].len());
                // Keep the arc pj -> pi (everything except the replaced interior).
                let keep_len = len - interior_len;
                for k in 0..keep_len {
                    cand.push(cyc[(pj + k) % len]);
                }
                // Bridge pi -> v -> pj: fan[i] reversed (dropping its cycle
                // endpoint), then fan[j] interior (dropping v and endpoint).
                for &w in fan[i][1..fan[i].len() - 1].iter().rev() {
                    cand.push(w);
                }
                cand.push(v);
                for &w in &fan[j][1..fan[j].len() - 1] {
                    cand.push(w);
                }
                if best.as_ref().is_none_or(|b| cand.len() > b.len()) {
                    best = Some(cand);
                }
            }
        }
        match best {
            Some(next) => {
                debug_assert_eq!(
                    next.iter().collect::<BTreeSet<_>>().len(),
                    next.len(),
                    "augmented cycle must stay simple"
                );
                cyc = next;
            }
            None => return Err(Error::AugmentationStuck),
        }
    }
    let walk = ClosedWalk::new(g, cyc)?;
    debug_assert!(walk.is_simple());
    SteinerCycle::new(walk, x.clone())
}

/// A closed walk through `s`, not necessarily simple: nearest-neighbor
/// ordering of `s` under the metric, improved by 2-opt, with consecutive
/// required vertices joined by shortest paths realized in the graph.
pub fn approximate_steiner_cycle(
    g: &Graph,
    metric: &Metric,
    s: &BTreeSet<usize>,
) -> Result<SteinerCycle> {
    if s.len() < 2 {
        return Err(Error::BadParameter(
            "approximate cycles need at least two required vertices".into(),
        ));
    }
    let order = two_opt(metric, nearest_neighbor_order(metric, s));
    let mut seq: Vec<usize> = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    for &v in &order {
        visited[v] = true;
    }
    for i in 0..order.len() {
        let a = order[i];
        let b = order[(i + 1) % order.len()];
        let path = fresh_shortest_path(g, metric, a, b, &visited);
        for &v in &path {
            visited[v] = true;
        }
        seq.extend_from_slice(&path[..path.len() - 1]);
    }
    if seq.len() < 3 {
        // Two adjacent required vertices collapse to the doubled edge; pad
        // with a neighbor detour to keep the walk well-formed.
        let a = seq[0];
        let b = seq[1];
        let w = g
            .neighbors(b)
            .iter()
            .copied()
            .find(|&w| w != a)
            .ok_or_else(|| Error::BadParameter("graph too small for a closed walk".into()))?;
        seq = vec![a, b, w, b];
    }
    let walk = ClosedWalk::new(g, seq)?;
    SteinerCycle::new(walk, s.clone())
}

/// Shortest a-b path preferring vertices not yet on the walk, so the walk
/// picks up as many unique vertices as the hop budget allows.
fn fresh_shortest_path(
    g: &Graph,
    metric: &Metric,
    a: usize,
    b: usize,
    visited: &[bool],
) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        let step = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| metric.dist(w, b) + 1 == metric.dist(cur, b))
            .min_by_key(|&w| (visited[w], w))
            .expect("metric guarantees a descending neighbor");
        path.push(step);
        cur = step;
    }
    path
}

fn nearest_neighbor_order(metric: &Metric, s: &BTreeSet<usize>) -> Vec<usize> {
    let mut remaining: BTreeSet<usize> = s.clone();
    let start = *remaining.iter().next().expect("non-empty");
    remaining.remove(&start);
    let mut order = vec![start];
    while !remaining.is_empty() {
        let cur = *order.last().unwrap();
        let next = *remaining
            .iter()
            .min_by_key(|&&v| (metric.dist(cur, v), v))
            .unwrap();
        remaining.remove(&next);
        order.push(next);
    }
    order
}

fn two_opt(metric: &Metric, mut order: Vec<usize>) -> Vec<usize> {
    let k = order.len();
    if k < 4 {
        return order;
    }
    let dist = |o: &[usize], i: usize, j: usize| metric.dist(o[i % k], o[j % k]);
    let mut improved = true;
    let mut rounds = 0;
    while improved && rounds < 50 {
        improved = false;
        rounds += 1;
        for i in 0..k - 1 {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue; // same edge pair
                }
                let before = dist(&order, i, i + 1) + dist(&order, j, j + 1);
                let after = dist(&order, i, j) + dist(&order, i + 1, j + 1);
                if after < before {
                    order[i + 1..=j].reverse();
                    improved = true;
                }
            }
        }
    }
    order
}

/// Convenience wrapper computing the metric first.
pub fn approximate_steiner_cycle_auto(g: &Graph, s: &BTreeSet<usize>) -> Result<SteinerCycle> {
    let metric = shortest_path_metric(g)?;
    approximate_steiner_cycle(g, &metric, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, NamedGraph};

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    fn fig_walk_graph() -> (Graph, Vec<usize>) {
        // A closed walk with 8 unique vertices and 10 steps: a figure-eight
        // over two pinch vertices (1 and 5).
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (1, 3),
            (1, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (5, 7),
            (0, 5),
        ];
        let g = Graph::from_edge_list(8, &edges).unwrap();
        let walk = vec![0, 1, 2, 3, 1, 4, 5, 6, 7, 5];
        (g, walk)
    }

    #[test]
    fn walk_stats_simple_cycle() {
        let g = named(NamedGraph::Cycle(5)).unwrap();
        let w = ClosedWalk::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        let st = walk_stats(&w);
        assert_eq!((st.unique, st.length), (5, 5));
        assert_eq!(st.beta, Rational::one());
        assert!(w.is_simple());
    }

    #[test]
    fn walk_stats_figure_eight() {
        let (g, seq) = fig_walk_graph();
        let w = ClosedWalk::new(&g, seq).unwrap();
        let st = walk_stats(&w);
        assert_eq!((st.unique, st.length), (8, 10));
        assert_eq!(st.beta, Rational::new(5, 4));
    }

    #[test]
    fn degenerate_walk_rejected() {
        let g = named(NamedGraph::Cycle(4)).unwrap();
        assert!(ClosedWalk::new(&g, vec![0, 1]).is_err());
        assert!(ClosedWalk::new(&g, vec![0, 1, 3]).is_err()); // (1,3) not an edge
    }

    #[test]
    fn find_cycle_through_pair_on_six_cycle() {
        let g = named(NamedGraph::Cycle(6)).unwrap();
        let c = find_steiner_cycle(&g, &set(&[0, 3]), 18).unwrap();
        assert!(c.is_simple());
        assert!(c.walk().contains(0) && c.walk().contains(3));
        assert_eq!(c.walk().len(), 6); // the only cycle available
    }

    #[test]
    fn find_cycle_requires_biconnected() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            find_steiner_cycle(&g, &set(&[0, 2]), 18),
            Err(Error::NotBiconnected)
        );
    }

    #[test]
    fn petersen_triples_via_dirac() {
        let g = named(NamedGraph::Petersen).unwrap();
        let c = dirac_cycle(&g, &set(&[0, 3, 7])).unwrap();
        assert!(c.is_simple());
        for v in [0, 3, 7] {
            assert!(c.walk().contains(v));
        }
    }

    #[test]
    fn dirac_rejects_oversized_sets() {
        let g = named(NamedGraph::Cycle(5)).unwrap();
        assert!(matches!(
            dirac_cycle(&g, &set(&[0, 1, 2])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn dirac_on_k4_and_small_cycles() {
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = dirac_cycle(&k4, &set(&[0, 1, 2])).unwrap();
        assert!(c.is_simple());
        assert!(c.walk().len() >= 3);

        let c5 = named(NamedGraph::Cycle(5)).unwrap();
        let c = dirac_cycle(&c5, &set(&[0, 2])).unwrap();
        assert_eq!(c.walk().len(), 5);
    }

    #[test]
    fn k23_right_side_is_not_cyclable() {
        let g = named(NamedGraph::CompleteBipartite(2, 3)).unwrap();
        let rights = set(&[2, 3, 4]);
        assert_eq!(
            find_steiner_cycle(&g, &rights, 18),
            Err(Error::NotFound(NotFoundReason::ProvenAbsent))
        );
        let flags = cyclability_predicates(&g, &rights).unwrap();
        assert!(!flags.dirac && !flags.shi && !flags.fournier);
    }

    #[test]
    fn k23_left_pair_satisfies_shi() {
        let g = named(NamedGraph::CompleteBipartite(2, 3)).unwrap();
        let flags = cyclability_predicates(&g, &set(&[0, 1])).unwrap();
        assert!(flags.shi);
    }

    #[test]
    fn petersen_triples_satisfy_dirac_predicate() {
        let g = named(NamedGraph::Petersen).unwrap();
        let flags = cyclability_predicates(&g, &set(&[1, 4, 9])).unwrap();
        assert!(flags.dirac);
    }

    #[test]
    fn approximate_cycle_on_k23_rights() {
        let g = named(NamedGraph::CompleteBipartite(2, 3)).unwrap();
        let metric = shortest_path_metric(&g).unwrap();
        let c = approximate_steiner_cycle(&g, &metric, &set(&[2, 3, 4])).unwrap();
        for v in [2, 3, 4] {
            assert!(c.walk().contains(v));
        }
        // Best closed walk through all three rights has 5 unique vertices
        // and length 6.
        assert_eq!(c.beta(), Rational::new(6, 5));
    }

    #[test]
    fn approximate_cycle_recovers_hamiltonian_order() {
        let g = named(NamedGraph::Cycle(6)).unwrap();
        let metric = shortest_path_metric(&g).unwrap();
        let all: BTreeSet<usize> = (0..6).collect();
        let c = approximate_steiner_cycle(&g, &metric, &all).unwrap();
        assert_eq!(c.gamma(), Rational::from_integer(0));
        assert!(c.is_simple());
    }

    #[test]
    fn approximate_cycle_beta_matches_recomputation() {
        let g = named(NamedGraph::CompleteBipartite(2, 4)).unwrap();
        let metric = shortest_path_metric(&g).unwrap();
        let s: BTreeSet<usize> = [2, 3, 4, 5].into_iter().collect();
        let c = approximate_steiner_cycle(&g, &metric, &s).unwrap();
        let st = walk_stats(c.walk());
        assert_eq!(c.beta(), st.beta);
    }
}

//! Tour construction: combine a spanning tree with a (possibly approximate)
//! Steiner cycle through its odd-degree set into a TSP tour with a certified
//! length bound.
//!
//! Two cases, split on the unique-vertex count |C| of the cycle against
//! 2n/(3-gamma) in exact rational arithmetic (ties go to the matching case):
//!
//! * contract-and-double: contract the cycle to one supervertex, double a
//!   spanning tree of the quotient, take an Euler circuit of the doubled
//!   edges plus the cycle walk; bound (1+gamma)|C| + 2(n-|C|).
//! * tree-plus-matching: add shortest-path realizations of the cheaper
//!   alternating matching on the odd set (induced by the cycle order) to the
//!   tree; bound (n-1) + (1+gamma)|C|/2.
//!
//! Both stay below 4n/(3-gamma); gamma = 0 for simple cycles gives 4n/3.
//! The plain doubled-tree walk (bound 2(n-1)) is the fallback.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, NotFoundReason, Result};
use crate::graph::{shortest_path_metric, Graph, Metric};
use crate::spanning::{build_spanning_tree, SpanningTree, TreeStrategy};
use crate::steiner::{approximate_steiner_cycle, find_steiner_cycle, SteinerCycle};
use crate::Rational;

/// A closed tour visiting every vertex: the realized walk, the shortcut stop
/// sequence (first occurrences), and the metric length of the stop sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    pub stops: Vec<usize>,
    pub length: usize,
    pub walk: Vec<usize>,
}

/// Which construction produced a tour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCase {
    ContractDouble,
    TreeMatching,
    DoubleTreeFallback,
}

impl BoundCase {
    pub fn name(&self) -> &'static str {
        match self {
            BoundCase::ContractDouble => "CONTRACT_DOUBLE",
            BoundCase::TreeMatching => "TREE_MATCHING",
            BoundCase::DoubleTreeFallback => "DOUBLE_TREE_FALLBACK",
        }
    }
}

/// Record of which bound applies and the witnessing quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub case: BoundCase,
    pub n: usize,
    pub cycle_unique: Option<usize>,
    pub cycle_length: Option<usize>,
    pub gamma: Rational,
    pub bound: Rational,
    pub achieved: usize,
    pub tree_strategy: Option<TreeStrategy>,
    pub opt: Option<usize>,
}

impl Certificate {
    pub fn bound_holds(&self) -> bool {
        Rational::from_integer(self.achieved as i64) <= self.bound
    }

    /// Flat JSON object: exact rationals split into numerator/denominator.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "case": self.case.name(),
            "n": self.n,
            "cycle_unique": self.cycle_unique,
            "cycle_length": self.cycle_length,
            "gamma": format!("{}/{}", self.gamma.numer(), self.gamma.denom()),
            "bound_num": *self.bound.numer(),
            "bound_den": *self.bound.denom(),
            "achieved": self.achieved,
            "opt": self.opt,
            "tree_strategy": self.tree_strategy.map(|s| s.name()),
        })
    }
}

/// Multiset of edges with all vertex degrees even; admits an Euler circuit
/// on each connected component of its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EvenMultigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| degree[v] % 2 == 1) {
            return Err(Error::OddDegree(v));
        }
        Ok(Self { n, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Closed walk traversing every multigraph edge exactly once (Hierholzer).
/// Returned in cyclic form: the first vertex is not repeated at the end.
pub fn euler_circuit(mg: &EvenMultigraph) -> Result<Vec<usize>> {
    let n = mg.n;
    let m = mg.edges.len();
    if m == 0 {
        return Err(Error::DisconnectedSupport);
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in mg.edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let support: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    // connectivity of the support
    let mut seen = vec![false; n];
    let mut queue = vec![support[0]];
    seen[support[0]] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop() {
        for &(w, _) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push(w);
            }
        }
    }
    if reached != support.len() {
        return Err(Error::DisconnectedSupport);
    }
    let mut used = vec![false; m];
    let mut next = vec![0usize; n];
    let mut stack = vec![support[0]];
    let mut circuit = Vec::with_capacity(m + 1);
    while let Some(&u) = stack.last() {
        let mut advanced = false;
        while next[u] < adj[u].len() {
            let (w, id) = adj[u][next[u]];
            if used[id] {
                next[u] += 1;
                continue;
            }
            used[id] = true;
            next[u] += 1;
            stack.push(w);
            advanced = true;
            break;
        }
        if !advanced {
            circuit.push(stack.pop().expect("non-empty stack"));
        }
    }
    circuit.reverse();
    debug_assert_eq!(circuit.len(), m + 1);
    debug_assert_eq!(circuit.first(), circuit.last());
    circuit.pop();
    Ok(circuit)
}

/// Keeps the first occurrence of each vertex in walk order and closes the
/// cycle; by the triangle inequality the metric length never exceeds the
/// walk's edge count (asserted).
pub fn shortcut(walk: &[usize], metric: &Metric) -> Tour {
    let n = metric.n();
    let mut seen = vec![false; n];
    let mut stops = Vec::with_capacity(n);
    for &v in walk {
        if !seen[v] {
            seen[v] = true;
            stops.push(v);
        }
    }
    assert_eq!(stops.len(), n, "shortcut input must visit every vertex");
    let length = metric.closed_length(&stops);
    assert!(
        length <= walk.len(),
        "shortcutting must never increase length"
    );
    Tour {
        stops,
        length,
        walk: walk.to_vec(),
    }
}

/// The cheaper of the two alternating pairings of `s` in its order of first
/// occurrence along the cycle. The returned pairs have total metric length
/// at most l(C)/2, since each pair's distance is bounded by its cycle arc
/// and the two pairings' arcs partition the cycle (asserted).
pub fn cycle_induced_matching(
    metric: &Metric,
    cycle: &SteinerCycle,
    s: &BTreeSet<usize>,
) -> Result<Vec<(usize, usize)>> {
    if s.is_empty() || s.len() % 2 != 0 {
        return Err(Error::OddRequiredSet(s.len()));
    }
    let seq = cycle.walk().sequence();
    let mut order = Vec::with_capacity(s.len());
    let mut taken = BTreeSet::new();
    for &v in seq {
        if s.contains(&v) && taken.insert(v) {
            order.push(v);
        }
    }
    if order.len() != s.len() {
        let missing = *s
            .iter()
            .find(|v| !taken.contains(v))
            .expect("missing vertex");
        return Err(Error::RequiredNotOnCycle(missing));
    }
    let k = order.len();
    let pairing = |offset: usize| -> (usize, Vec<(usize, usize)>) {
        let mut total = 0;
        let mut pairs = Vec::with_capacity(k / 2);
        let mut i = offset;
        loop {
            let a = order[i % k];
            let b = order[(i + 1) % k];
            total += metric.dist(a, b);
            pairs.push((a, b));
            i += 2;
            if (i - offset) >= k {
                break;
            }
        }
        (total, pairs)
    };
    let (len1, m1) = pairing(0);
    let (len2, m2) = pairing(1);
    let (total, chosen) = if len1 <= len2 { (len1, m1) } else { (len2, m2) };
    assert!(
        2 * total <= cycle.walk().len(),
        "matching length {total} exceeds half the cycle length {}",
        cycle.walk().len()
    );
    Ok(chosen)
}

/// Core construction: tree + Steiner cycle through its odd set -> tour with
/// certificate. Requires the cycle's required set to cover the tree's odd
/// set and gamma < 1.
pub fn build_tour(
    g: &Graph,
    metric: &Metric,
    tree: &SpanningTree,
    cycle: &SteinerCycle,
) -> Result<(Tour, Certificate)> {
    let n = g.vertex_count();
    if let Some(&v) = tree
        .odd_set()
        .iter()
        .find(|v| !cycle.required().contains(v))
    {
        return Err(Error::RequiredSetNotCovered(v));
    }
    let gamma = cycle.gamma();
    if gamma >= Rational::one() {
        return Err(Error::GammaTooLarge(gamma));
    }
    let c_unique = cycle.walk().unique_count() as i64;
    let c_length = cycle.walk().len() as i64;
    let threshold = Rational::from_integer(2 * n as i64) / (Rational::from_integer(3) - gamma);
    let one_plus_gamma = Rational::one() + gamma;
    let (case, multigraph, bound) = if Rational::from_integer(c_unique) > threshold {
        let mut edges: Vec<(usize, usize)> = cycle
            .walk()
            .sequence()
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, cycle.walk().sequence()[(i + 1) % cycle.walk().len()]))
            .collect();
        edges.extend(contracted_tree_edges(g, cycle));
        let bound = one_plus_gamma * c_unique + Rational::from_integer(2 * (n as i64 - c_unique));
        (
            BoundCase::ContractDouble,
            EvenMultigraph::new(n, edges)?,
            bound,
        )
    } else {
        let matching = cycle_induced_matching(metric, cycle, tree.odd_set())?;
        let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
        for (a, b) in matching {
            let path = g.shortest_path(a, b).ok_or(Error::Disconnected)?;
            edges.extend(path.windows(2).map(|w| (w[0], w[1])));
        }
        let bound = Rational::from_integer(n as i64 - 1) + one_plus_gamma * c_unique / 2;
        (
            BoundCase::TreeMatching,
            EvenMultigraph::new(n, edges)?,
            bound,
        )
    };
    let walk = euler_circuit(&multigraph)?;
    let tour = shortcut(&walk, metric);
    let cert = Certificate {
        case,
        n,
        cycle_unique: Some(c_unique as usize),
        cycle_length: Some(c_length as usize),
        gamma,
        bound,
        achieved: tour.length,
        tree_strategy: None,
        opt: None,
    };
    assert!(cert.bound_holds(), "achieved exceeds the certified bound");
    assert!(
        cert.bound <= Rational::from_integer(4 * n as i64) / (Rational::from_integer(3) - gamma),
        "case bound exceeds 4n/(3-gamma)"
    );
    Ok((tour, cert))
}

/// Doubled edges of a spanning tree of the quotient graph obtained by
/// contracting the cycle's vertex set to one supervertex. A breadth-first
/// sweep out of the whole cycle set yields the quotient tree directly, with
/// every quotient edge realized as a concrete graph edge.
fn contracted_tree_edges(g: &Graph, cycle: &SteinerCycle) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for &v in &cycle.walk().vertex_set() {
        visited[v] = true;
        queue.push_back(v);
    }
    let mut doubled = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !visited[w] {
                visited[w] = true;
                doubled.push((u, w));
                doubled.push((u, w));
                queue.push_back(w);
            }
        }
    }
    doubled
}

/// Doubled spanning tree, Euler circuit, shortcut: tour of length at most
/// 2(n-1) on any connected graph.
pub fn double_tree_baseline(g: &Graph, metric: &Metric) -> Result<Tour> {
    let tree = build_spanning_tree(g, TreeStrategy::Bfs, 0)?;
    let mut edges = Vec::with_capacity(2 * tree.edges().len());
    for &(u, v) in tree.edges() {
        edges.push((u, v));
        edges.push((u, v));
    }
    let mg = EvenMultigraph::new(g.vertex_count(), edges)?;
    let walk = euler_circuit(&mg)?;
    let tour = shortcut(&walk, metric);
    assert!(tour.length <= 2 * (g.vertex_count() - 1));
    Ok(tour)
}

/// True iff l(C) <= (1+4a)|C|/(1+a): under the lower bound OPT >= (1+a)n,
/// the 4n/(3-gamma) certificate then implies a 4/3-approximation.
pub fn corollary_check(alpha: Rational, cycle: &SteinerCycle) -> bool {
    debug_assert!(alpha >= Rational::zero() && alpha <= Rational::one());
    let lhs = Rational::from_integer(cycle.walk().len() as i64);
    let threshold = (Rational::one() + alpha * 4) / (Rational::one() + alpha);
    lhs <= threshold * Rational::from_integer(cycle.walk().unique_count() as i64)
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub strategies: Vec<TreeStrategy>,
    pub seed: u64,
    pub exhaustive_budget: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            strategies: TreeStrategy::ALL.to_vec(),
            seed: 0,
            exhaustive_budget: crate::steiner::DEFAULT_EXHAUSTIVE_BUDGET,
        }
    }
}

/// What happened for one tree strategy during a pipeline run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttemptOutcome {
    FoundSimple,
    ProvenAbsent,
    BudgetExhausted,
    UsedApproximate(Rational),
    ApproximateTooLong(Rational),
}

#[derive(Debug, Clone)]
pub struct Attempt {
    /// `None` for an externally supplied tree.
    pub strategy: Option<TreeStrategy>,
    pub odd_size: usize,
    pub outcome: AttemptOutcome,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub tour: Tour,
    pub certificate: Certificate,
    pub attempts: Vec<Attempt>,
    /// The Steiner cycle behind the winning certificate; `None` for the
    /// doubled-tree fallback.
    pub cycle: Option<SteinerCycle>,
}

impl SolveReport {
    /// True when some attempted odd set provably admits no simple cycle.
    pub fn any_proven_absent(&self) -> bool {
        self.attempts
            .iter()
            .any(|a| a.outcome == AttemptOutcome::ProvenAbsent)
    }
}

/// End-to-end pipeline: try the configured tree strategies, find a Steiner
/// cycle on each odd set, build tours, and keep the shortest. If no simple
/// cycle is found anywhere, fall back to an approximate cycle with gamma < 1,
/// then to the doubled spanning tree. Always returns a valid tour.
pub fn solve(g: &Graph, cfg: &SolveConfig) -> Result<(Tour, Certificate)> {
    solve_detailed(g, cfg).map(|r| (r.tour, r.certificate))
}

pub fn solve_detailed(g: &Graph, cfg: &SolveConfig) -> Result<SolveReport> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let metric = shortest_path_metric(g)?;
    let mut attempts = Vec::new();
    let mut best: Option<(Tour, Certificate, SteinerCycle)> = None;
    let mut leftovers: Vec<(TreeStrategy, SpanningTree)> = Vec::new();
    for &strategy in &cfg.strategies {
        let tree = build_spanning_tree(g, strategy, cfg.seed)?;
        let odd_size = tree.odd_set().len();
        match find_steiner_cycle(g, tree.odd_set(), cfg.exhaustive_budget) {
            Ok(cycle) => {
                let (tour, mut cert) = build_tour(g, &metric, &tree, &cycle)?;
                cert.tree_strategy = Some(strategy);
                attempts.push(Attempt {
                    strategy: Some(strategy),
                    odd_size,
                    outcome: AttemptOutcome::FoundSimple,
                });
                if best.as_ref().is_none_or(|(t, _, _)| tour.length < t.length) {
                    best = Some((tour, cert, cycle));
                }
            }
            Err(Error::NotFound(reason)) => {
                attempts.push(Attempt {
                    strategy: Some(strategy),
                    odd_size,
                    outcome: match reason {
                        NotFoundReason::ProvenAbsent => AttemptOutcome::ProvenAbsent,
                        NotFoundReason::Budget => AttemptOutcome::BudgetExhausted,
                    },
                });
                leftovers.push((strategy, tree));
            }
            Err(e) => return Err(e),
        }
    }
    if best.is_none() {
        for (strategy, tree) in &leftovers {
            let cycle = approximate_steiner_cycle(g, &metric, tree.odd_set())?;
            if cycle.gamma() < Rational::one() {
                let (tour, mut cert) = build_tour(g, &metric, tree, &cycle)?;
                cert.tree_strategy = Some(*strategy);
                attempts.push(Attempt {
                    strategy: Some(*strategy),
                    odd_size: tree.odd_set().len(),
                    outcome: AttemptOutcome::UsedApproximate(cycle.gamma()),
                });
                if best.as_ref().is_none_or(|(t, _, _)| tour.length < t.length) {
                    best = Some((tour, cert, cycle));
                }
            } else {
                attempts.push(Attempt {
                    strategy: Some(*strategy),
                    odd_size: tree.odd_set().len(),
                    outcome: AttemptOutcome::ApproximateTooLong(cycle.gamma()),
                });
            }
        }
    }
    let (tour, certificate, cycle) = match best {
        Some((tour, cert, cycle)) => (tour, cert, Some(cycle)),
        None => {
            let n = g.vertex_count();
            let tour = double_tree_baseline(g, &metric)?;
            let cert = Certificate {
                case: BoundCase::DoubleTreeFallback,
                n,
                cycle_unique: None,
                cycle_length: None,
                gamma: Rational::zero(),
                bound: Rational::from_integer(2 * (n as i64 - 1)),
                achieved: tour.length,
                tree_strategy: None,
                opt: None,
            };
            assert!(cert.bound_holds());
            (tour, cert, None)
        }
    };
    Ok(SolveReport {
        tour,
        certificate,
        attempts,
        cycle,
    })
}

/// Pipeline run against one supplied spanning tree (covers externally given
/// Hamiltonian paths and few-leaf trees).
pub fn solve_with_tree(
    g: &Graph,
    tree: &SpanningTree,
    exhaustive_budget: usize,
) -> Result<SolveReport> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let metric = shortest_path_metric(g)?;
    let odd_size = tree.odd_set().len();
    let mut attempts = Vec::new();
    match find_steiner_cycle(g, tree.odd_set(), exhaustive_budget) {
        Ok(cycle) => {
            let (tour, cert) = build_tour(g, &metric, tree, &cycle)?;
            attempts.push(Attempt {
                strategy: None,
                odd_size,
                outcome: AttemptOutcome::FoundSimple,
            });
            return Ok(SolveReport {
                tour,
                certificate: cert,
                attempts,
                cycle: Some(cycle),
            });
        }
        Err(Error::NotFound(reason)) => {
            attempts.push(Attempt {
                strategy: None,
                odd_size,
                outcome: match reason {
                    NotFoundReason::ProvenAbsent => AttemptOutcome::ProvenAbsent,
                    NotFoundReason::Budget => AttemptOutcome::BudgetExhausted,
                },
            });
        }
        Err(e) => return Err(e),
    }
    let cycle = approximate_steiner_cycle(g, &metric, tree.odd_set())?;
    if cycle.gamma() < Rational::one() {
        let (tour, cert) = build_tour(g, &metric, tree, &cycle)?;
        attempts.push(Attempt {
            strategy: None,
            odd_size,
            outcome: AttemptOutcome::UsedApproximate(cycle.gamma()),
        });
        return Ok(SolveReport {
            tour,
            certificate: cert,
            attempts,
            cycle: Some(cycle),
        });
    }
    let n = g.vertex_count();
    let tour = double_tree_baseline(g, &metric)?;
    let certificate = Certificate {
        case: BoundCase::DoubleTreeFallback,
        n,
        cycle_unique: None,
        cycle_length: None,
        gamma: Rational::zero(),
        bound: Rational::from_integer(2 * (n as i64 - 1)),
        achieved: tour.length,
        tree_strategy: None,
        opt: None,
    };
    Ok(SolveReport {
        tour,
        certificate,
        attempts,
        cycle: None,
    })
}

/// Solves many instances; rayon-parallel when the `parallel` feature is on,
/// with results in input order either way.
pub fn solve_batch(graphs: &[Graph], cfg: &SolveConfig) -> Vec<Result<(Tour, Certificate)>> {
    #[cfg(feature = "parallel")]
    {
        graphs.par_iter().map(|g| solve(g, cfg)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_batch_seq(graphs, cfg)
    }
}

/// Sequential fallback of [`solve_batch`].
pub fn solve_batch_seq(graphs: &[Graph], cfg: &SolveConfig) -> Vec<Result<(Tour, Certificate)>> {
    graphs.iter().map(|g| solve(g, cfg)).collect()
}

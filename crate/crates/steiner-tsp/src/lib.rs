//! Graph-TSP tours with certified length bounds, built from spanning trees
//! and Steiner cycles.
//!
//! For a biconnected unweighted graph: build a spanning tree, find a simple
//! (or approximate) cycle through the tree's odd-degree vertices, and combine
//! the doubled-tree and tree-plus-matching constructions into a tour of
//! length at most 4n/3 — or 4n/(3-gamma) when only an approximate cycle with
//! relative excess gamma is available. Exact brute-force oracles (optimal
//! tours, exhaustive cycle search, cyclability sweeps) validate everything at
//! desk scale, and a DFS back-edge certificate witnesses the
//! (4n + 2k)/3 circulation bound for k-leaf DFS trees.
//!
//! The data-parallel paths (exhaustive search, subset DP, batch solving) run
//! on rayon when the default `parallel` feature is enabled and fall back to
//! sequential code without it; results are identical either way.

pub mod dfs_circulation;
pub mod error;
mod flow;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod spanning;
pub mod steiner;
pub mod tour;

/// Exact rational arithmetic for ratios, thresholds, and bounds.
pub type Rational = num_rational::Ratio<i64>;

pub use error::{Error, NotFoundReason, Result};
pub use graph::{shortest_path_metric, Graph, Metric, Sigma2, VertexPairPaths};
pub use spanning::{build_spanning_tree, SpanningTree, TreeStrategy};
pub use steiner::{
    approximate_steiner_cycle, cyclability_predicates, dirac_cycle, find_steiner_cycle, walk_stats,
    ClosedWalk, CyclabilityFlags, SteinerCycle, WalkStats,
};
pub use tour::{
    build_tour, corollary_check, cycle_induced_matching, double_tree_baseline, euler_circuit,
    shortcut, solve, solve_batch, solve_batch_seq, solve_detailed, solve_with_tree, BoundCase,
    Certificate, EvenMultigraph, SolveConfig, SolveReport, Tour,
};

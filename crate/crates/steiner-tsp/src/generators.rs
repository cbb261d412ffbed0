//! Named and random instance families. Every generator is deterministic in
//! its parameters and seed, and post-checks its own structural claims.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spanning::SpanningTree;

/// Canonical constructions with documented vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// 10 vertices: outer cycle 0..=4, spokes i -- i+5, inner pentagram on 5..=9.
    Petersen,
    /// Hub 0 joined to a rim cycle 1..=r; requires r >= 3.
    Wheel(usize),
    /// Left part 0..c, right part c..c+n; requires c >= 2 and n >= c.
    CompleteBipartite(usize, usize),
    /// Cycle 0 - 1 - ... - (n-1) - 0; requires n >= 3.
    Cycle(usize),
    /// Cycle on n vertices plus the chord (0, chord); requires 2 <= chord <= n-2.
    Theta(usize, usize),
}

pub fn named(which: NamedGraph) -> Result<Graph> {
    match which {
        NamedGraph::Petersen => {
            let mut edges = Vec::with_capacity(15);
            for i in 0..5 {
                edges.push((i, (i + 1) % 5)); // outer cycle
                edges.push((i, i + 5)); // spoke
                edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            }
            Graph::from_edge_list(10, &edges)
        }
        NamedGraph::Wheel(r) => {
            if r < 3 {
                return Err(Error::BadParameter(format!("wheel rim size {r} < 3")));
            }
            let mut edges = Vec::with_capacity(2 * r);
            for i in 1..=r {
                edges.push((0, i));
                edges.push((i, i % r + 1));
            }
            Graph::from_edge_list(r + 1, &edges)
        }
        NamedGraph::CompleteBipartite(c, n) => {
            if c < 2 || n < c {
                return Err(Error::BadParameter(format!(
                    "complete bipartite needs c >= 2 and n >= c, got ({c},{n})"
                )));
            }
            let mut edges = Vec::with_capacity(c * n);
            for u in 0..c {
                for v in 0..n {
                    edges.push((u, c + v));
                }
            }
            Graph::from_edge_list(c + n, &edges)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadParameter(format!("cycle length {n} < 3")));
            }
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edge_list(n, &edges)
        }
        NamedGraph::Theta(n, chord) => {
            if n < 4 || chord < 2 || chord > n - 2 {
                return Err(Error::BadParameter(format!(
                    "theta needs n >= 4 and 2 <= chord <= n-2, got ({n},{chord})"
                )));
            }
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.push((0, chord));
            Graph::from_edge_list(n, &edges)
        }
    }
}

fn seeded_rng(seed: u64, nonce: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(nonce))
}

const RETRY_LIMIT: u64 = 200;

/// The path 0 - 1 - ... - (n-1) plus `extra_edges` random chords, regenerated
/// with an incremented nonce until the result is biconnected. The planted
/// Hamiltonian path is always the identity ordering; see [`planted_path_tree`].
pub fn planted_ham_path(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("need n >= 3, got {n}")));
    }
    for nonce in 0..RETRY_LIMIT {
        let mut rng = seeded_rng(seed, nonce);
        let mut edges: std::collections::BTreeSet<(usize, usize)> =
            (0..n - 1).map(|i| (i, i + 1)).collect();
        let target = edges.len() + extra_edges;
        let mut attempts = 0;
        while edges.len() < target && attempts < 20 * (extra_edges + 1) {
            attempts += 1;
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a == b {
                continue;
            }
            edges.insert((a.min(b), a.max(b)));
        }
        let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
        let g = Graph::from_edge_list(n, &edge_list)?;
        if g.is_biconnected() {
            return Ok(g);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no biconnected planted-path instance with n={n}, extra={extra_edges} after {RETRY_LIMIT} tries"
    )))
}

/// The planted Hamiltonian path of a [`planted_ham_path`] instance, as a
/// spanning tree (the path edges (i, i+1)).
pub fn planted_path_tree(g: &Graph) -> Result<SpanningTree> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    SpanningTree::from_edges(g, edges)
}

/// Random graph with exactly `m` edges conditioned on biconnectivity via
/// rejection. Requires m >= n since a biconnected graph contains a cycle
/// through every vertex pair.
pub fn random_biconnected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 3 || m < n || m > n * (n - 1) / 2 {
        return Err(Error::BudgetExceeded(format!(
            "no biconnected graph with n={n}, m={m}"
        )));
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    for nonce in 0..RETRY_LIMIT {
        let mut rng = seeded_rng(seed, nonce);
        let mut chosen = pairs.clone();
        chosen.shuffle(&mut rng);
        chosen.truncate(m);
        let g = Graph::from_edge_list(n, &chosen)?;
        if g.is_biconnected() {
            return Ok(g);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no biconnected sample with n={n}, m={m} after {RETRY_LIMIT} tries"
    )))
}

/// Random simple 3-regular biconnected graph via the pairing model with
/// rejection. Requires even n >= 4.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "cubic graphs need even n >= 4, got {n}"
        )));
    }
    for nonce in 0..RETRY_LIMIT * 5 {
        let mut rng = seeded_rng(seed, nonce);
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || edges.contains(&(u.min(v), u.max(v))) {
                ok = false;
                break;
            }
            edges.push((u.min(v), u.max(v)));
        }
        if !ok {
            continue;
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_biconnected() {
            return Ok(g);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no biconnected cubic sample with n={n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let g = named(NamedGraph::Petersen).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_biconnected());
    }

    #[test]
    fn wheel_shape() {
        let g = named(NamedGraph::Wheel(6)).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(0), 6);
        assert!(named(NamedGraph::Wheel(2)).is_err());
    }

    #[test]
    fn bipartite_shape() {
        let g = named(NamedGraph::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.vertex_connectivity().unwrap(), 2);
        assert!(named(NamedGraph::CompleteBipartite(1, 3)).is_err());
    }

    #[test]
    fn theta_shape() {
        let g = named(NamedGraph::Theta(6, 3)).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(g.has_edge(0, 3));
        assert!(named(NamedGraph::Theta(6, 5)).is_err());
    }

    #[test]
    fn planted_path_small() {
        let g = planted_ham_path(6, 2, 11).unwrap();
        assert!(g.is_biconnected());
        for i in 0..5 {
            assert!(g.has_edge(i, i + 1));
        }
        let tree = planted_path_tree(&g).unwrap();
        assert_eq!(tree.leaf_count(), 2);
    }

    #[test]
    fn planted_path_minimal_triangle() {
        // n=3 with no extra edges can only become biconnected if retries
        // never add the missing chord, so expect the budget error.
        let res = planted_ham_path(3, 0, 5);
        assert!(matches!(res, Err(Error::BudgetExceeded(_))));
        let g = planted_ham_path(3, 1, 5).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn random_biconnected_post_checks() {
        let g = random_biconnected(8, 12, 3).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert!(g.is_biconnected());
        assert!(matches!(
            random_biconnected(5, 4, 3),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn determinism_identical_seeds() {
        let a = random_biconnected(9, 14, 42).unwrap();
        let b = random_biconnected(9, 14, 42).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = planted_ham_path(20, 6, 9).unwrap();
        let d = planted_ham_path(20, 6, 9).unwrap();
        assert_eq!(c.edges(), d.edges());
    }

    #[test]
    fn cubic_samples_are_cubic() {
        for seed in 0..5 {
            let g = random_cubic(12, seed).unwrap();
            assert!((0..12).all(|v| g.degree(v) == 3));
            assert!(g.is_biconnected());
        }
    }
}

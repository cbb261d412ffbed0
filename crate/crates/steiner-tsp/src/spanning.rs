//! Spanning-tree construction strategies and the derived odd-degree set.
//!
//! The odd-degree set S_T of a tree T is what the tour pipeline needs a
//! Steiner cycle through; its size is always even and at most 2(k-1) for a
//! tree with k leaves. The FEW_ODD strategy shrinks it by edge-swap local
//! search.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeStrategy {
    Bfs,
    Dfs,
    Random,
    FewOdd,
}

impl TreeStrategy {
    pub const ALL: [TreeStrategy; 4] = [
        TreeStrategy::Bfs,
        TreeStrategy::Dfs,
        TreeStrategy::Random,
        TreeStrategy::FewOdd,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TreeStrategy::Bfs => "bfs",
            TreeStrategy::Dfs => "dfs",
            TreeStrategy::Random => "random",
            TreeStrategy::FewOdd => "fewodd",
        }
    }
}

impl std::fmt::Display for TreeStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TreeStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfs" => Ok(TreeStrategy::Bfs),
            "dfs" => Ok(TreeStrategy::Dfs),
            "random" => Ok(TreeStrategy::Random),
            "fewodd" => Ok(TreeStrategy::FewOdd),
            other => Err(Error::BadParameter(format!("unknown strategy {other:?}"))),
        }
    }
}

/// A validated spanning tree of a host graph, with its degree sequence, the
/// odd-degree set, and the leaf count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<(usize, usize)>,
    degree: Vec<usize>,
    odd_set: BTreeSet<usize>,
    leaf_count: usize,
}

impl SpanningTree {
    /// Validates that `edges` form a spanning tree of `g`: n-1 edges, every
    /// edge present in `g`, acyclic, and spanning.
    pub fn from_edges(g: &Graph, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = g.vertex_count();
        if n < 2 {
            return Err(Error::BadParameter(
                "spanning trees need at least 2 vertices".into(),
            ));
        }
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        edges.dedup();
        if edges.len() != n - 1 {
            return Err(Error::BadParameter(format!(
                "expected {} tree edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut dsu = Dsu::new(n);
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            if !g.has_edge(u, v) {
                return Err(Error::BadParameter(format!(
                    "tree edge ({u},{v}) is not an edge of the graph"
                )));
            }
            if !dsu.union(u, v) {
                return Err(Error::BadParameter(format!(
                    "tree edge ({u},{v}) closes a cycle"
                )));
            }
        }
        Ok(Self::from_valid_edges(n, edges))
    }

    fn from_valid_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let odd_set: BTreeSet<usize> = (0..n).filter(|&v| degree[v] % 2 == 1).collect();
        let leaf_count = degree.iter().filter(|&&d| d == 1).count();
        debug_assert!(odd_set.len() % 2 == 0, "handshake parity");
        debug_assert!(odd_set.len() <= 2 * (leaf_count.max(1) - 1) || n == 2);
        Self {
            edges,
            degree,
            odd_set,
            leaf_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.degree.len()
    }

    /// Tree edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// Vertices of odd tree degree (always an even number of them).
    pub fn odd_set(&self) -> &BTreeSet<usize> {
        &self.odd_set
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_count
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            false
        } else {
            self.parent[ru] = rv;
            true
        }
    }
}

/// Builds a spanning tree of a connected graph. BFS and DFS are rooted at 0;
/// RANDOM is Kruskal over a seeded shuffle of the edges; FEW_ODD starts from
/// RANDOM and hill-climbs to shrink the odd-degree set (default budget of
/// 50n swap attempts).
pub fn build_spanning_tree(g: &Graph, strategy: TreeStrategy, seed: u64) -> Result<SpanningTree> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::BadParameter(
            "spanning trees need at least 2 vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = match strategy {
        TreeStrategy::Bfs => bfs_tree_edges(g, 0),
        TreeStrategy::Dfs => dfs_tree_edges(g, 0),
        TreeStrategy::Random => random_tree_edges(g, seed),
        TreeStrategy::FewOdd => {
            let start = SpanningTree::from_valid_edges(n, normalized(random_tree_edges(g, seed)));
            return Ok(few_odd_search(g, start, seed, 50 * n));
        }
    };
    Ok(SpanningTree::from_valid_edges(n, normalized(edges)))
}

fn normalized(mut edges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    edges
}

fn bfs_tree_edges(g: &Graph, root: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut edges = Vec::with_capacity(n - 1);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

fn dfs_tree_edges(g: &Graph, root: usize) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut next = vec![0usize; n];
    let mut stack = vec![root];
    seen[root] = true;
    let mut edges = Vec::with_capacity(n - 1);
    while let Some(&u) = stack.last() {
        if next[u] < g.neighbors(u).len() {
            let w = g.neighbors(u)[next[u]];
            next[u] += 1;
            if !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                stack.push(w);
            }
        } else {
            stack.pop();
        }
    }
    edges
}

fn random_tree_edges(g: &Graph, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all = g.edges();
    all.shuffle(&mut rng);
    let mut dsu = Dsu::new(g.vertex_count());
    let mut edges = Vec::with_capacity(g.vertex_count() - 1);
    for (u, v) in all {
        if dsu.union(u, v) {
            edges.push((u, v));
        }
    }
    edges
}

/// Edge-swap hill climb: add a random non-tree edge, remove a random edge of
/// the induced cycle, accept only strict decreases of |odd set|. Never
/// returns a tree with a larger odd set than `start`.
pub fn few_odd_search(
    g: &Graph,
    start: SpanningTree,
    seed: u64,
    iterations: usize,
) -> SpanningTree {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0dd5);
    let all = g.edges();
    let mut tree: BTreeSet<(usize, usize)> = start.edges().iter().copied().collect();
    let mut degree = vec![0usize; n];
    for &(u, v) in &tree {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut odd = degree.iter().filter(|&&d| d % 2 == 1).count();
    // adjacency of the current tree, for cycle recovery
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in &tree {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for _ in 0..iterations {
        if odd == 2 {
            break; // a tree has at least two odd-degree vertices
        }
        let &(u, v) = all
            .get(rng.random_range(0..all.len()))
            .expect("non-empty edge list");
        if tree.contains(&(u, v)) {
            continue;
        }
        // Tree path u -> v plus (u, v) is the induced cycle.
        let path = tree_path(&adj, n, u, v);
        let mut cycle_edges: Vec<(usize, usize)> = path
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        cycle_edges.push((u, v));
        let &(a, b) = cycle_edges
            .get(rng.random_range(0..cycle_edges.len()))
            .expect("non-empty cycle");
        if (a, b) == (u, v) {
            continue; // swapping the new edge for itself changes nothing
        }
        // Parity delta: removing (a,b) and adding (u,v) flips four endpoints.
        let mut new_odd = odd;
        for &(w, flip_in) in &[(a, false), (b, false), (u, true), (v, true)] {
            let before = degree[w] % 2 == 1;
            degree[w] = if flip_in {
                degree[w] + 1
            } else {
                degree[w] - 1
            };
            let after = degree[w] % 2 == 1;
            match (before, after) {
                (true, false) => new_odd -= 1,
                (false, true) => new_odd += 1,
                _ => {}
            }
        }
        if new_odd < odd {
            tree.remove(&(a, b));
            tree.insert((u, v));
            adj[a].remove(&b);
            adj[b].remove(&a);
            adj[u].insert(v);
            adj[v].insert(u);
            odd = new_odd;
        } else {
            // revert degrees
            for &(w, flip_in) in &[(a, false), (b, false), (u, true), (v, true)] {
                degree[w] = if flip_in {
                    degree[w] - 1
                } else {
                    degree[w] + 1
                };
            }
        }
    }
    SpanningTree::from_valid_edges(n, tree.into_iter().collect())
}

fn tree_path(adj: &[BTreeSet<usize>], n: usize, s: usize, t: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![s];
    let mut seen = vec![false; n];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        if u == t {
            break;
        }
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, NamedGraph};

    fn validate(g: &Graph, t: &SpanningTree) {
        assert_eq!(t.edges().len(), g.vertex_count() - 1);
        SpanningTree::from_edges(g, t.edges().to_vec()).expect("valid tree");
        assert_eq!(t.odd_set().len() % 2, 0);
        assert!(t.odd_set().len() <= 2 * (t.leaf_count() - 1));
    }

    #[test]
    fn bfs_tree_on_six_cycle_has_even_odd_set() {
        let g = named(NamedGraph::Cycle(6)).unwrap();
        let t = build_spanning_tree(&g, TreeStrategy::Bfs, 0).unwrap();
        validate(&g, &t);
        for &v in t.odd_set() {
            assert_eq!(t.degree(v) % 2, 1);
        }
    }

    #[test]
    fn star_tree_on_k4_has_all_odd() {
        let g =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = build_spanning_tree(&g, TreeStrategy::Bfs, 0).unwrap();
        // BFS from 0 on K4 is the star at 0: degrees (3,1,1,1).
        assert_eq!(t.degree(0), 3);
        assert_eq!(t.odd_set().len(), 4);
        assert_eq!(t.leaf_count(), 3);
    }

    #[test]
    fn ham_path_tree_odd_set_is_endpoints() {
        let g = named(NamedGraph::Cycle(7)).unwrap();
        let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        let t = SpanningTree::from_edges(&g, edges).unwrap();
        assert_eq!(t.odd_set().iter().copied().collect::<Vec<_>>(), vec![0, 6]);
        assert_eq!(t.leaf_count(), 2);
    }

    #[test]
    fn star_parity_by_size() {
        // Star on n vertices: all odd when n even, hub even when n odd.
        for n in [6usize, 7] {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            edges.push((1, 2)); // so the star is a subgraph, host needs the extra edge
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let star: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
            let t = SpanningTree::from_edges(&g, star).unwrap();
            assert_eq!(t.leaf_count(), n - 1);
            if n % 2 == 0 {
                assert_eq!(t.odd_set().len(), n);
            } else {
                assert_eq!(t.odd_set().len(), n - 1);
                assert!(!t.odd_set().contains(&0));
            }
        }
    }

    #[test]
    fn rejects_non_tree_inputs() {
        let g = named(NamedGraph::Cycle(4)).unwrap();
        assert!(SpanningTree::from_edges(&g, vec![(0, 1), (1, 2)]).is_err()); // too few
        assert!(SpanningTree::from_edges(&g, vec![(0, 1), (1, 3)]).is_err()); // not an edge
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(SpanningTree::from_edges(&k4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        // cycle
    }

    #[test]
    fn all_strategies_yield_valid_trees() {
        let g = named(NamedGraph::Petersen).unwrap();
        for strat in TreeStrategy::ALL {
            let t = build_spanning_tree(&g, strat, 7).unwrap();
            validate(&g, &t);
        }
    }

    #[test]
    fn few_odd_on_wheel_reaches_small_odd_set() {
        let g = named(NamedGraph::Wheel(6)).unwrap();
        for seed in 0..10 {
            let t = build_spanning_tree(&g, TreeStrategy::FewOdd, seed).unwrap();
            validate(&g, &t);
            assert!(
                t.odd_set().len() <= 4,
                "seed {seed}: odd set {:?}",
                t.odd_set()
            );
        }
    }

    #[test]
    fn few_odd_never_worse_than_random_start() {
        let g = named(NamedGraph::Petersen).unwrap();
        for seed in 0..20 {
            let start = build_spanning_tree(&g, TreeStrategy::Random, seed).unwrap();
            let improved = few_odd_search(&g, start.clone(), seed, 50 * 10);
            assert!(improved.odd_set().len() <= start.odd_set().len());
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            build_spanning_tree(&g, TreeStrategy::Bfs, 0),
            Err(Error::Disconnected)
        );
    }
}

//! Undirected simple unweighted graphs, the induced shortest-path metric,
//! and connectivity machinery: biconnectivity, vertex connectivity via
//! vertex-split maximum flow, and internally vertex-disjoint path pairs.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::flow;

/// Immutable simple graph. Adjacency lists are sorted and deduplicated at
/// construction; all later operations are pure functions of this value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are silently
    /// dropped; self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Ok(Self { adj, m })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// BFS hop distances from `s`; `u32::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Deterministic shortest path from `s` to `t` (BFS with smallest-index
    /// tie-breaking via the sorted adjacency lists).
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        if s == t {
            return Some(vec![s]);
        }
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    if w == t {
                        let mut path = vec![t];
                        let mut cur = t;
                        while cur != s {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// True iff the graph is connected, has at least 3 vertices, and has no
    /// articulation vertex.
    pub fn is_biconnected(&self) -> bool {
        let n = self.vertex_count();
        if n < 3 {
            return false;
        }
        // Iterative low-link DFS from vertex 0.
        let mut num = vec![0usize; n]; // entry index + 1; 0 = unvisited
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut next = vec![0usize; n];
        let mut stack = vec![0usize];
        num[0] = 1;
        low[0] = 1;
        let mut counter = 1usize;
        let mut root_children = 0usize;
        while let Some(&u) = stack.last() {
            if next[u] < self.adj[u].len() {
                let w = self.adj[u][next[u]];
                next[u] += 1;
                if num[w] == 0 {
                    counter += 1;
                    num[w] = counter;
                    low[w] = counter;
                    parent[w] = u;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push(w);
                } else if w != parent[u] {
                    low[u] = low[u].min(num[w]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= num[p] {
                        return false;
                    }
                }
            }
        }
        counter == n && root_children == 1
    }

    /// Exact vertex connectivity. Complete graphs return n-1 by convention.
    ///
    /// Sweeps a fixed minimum-degree vertex `s` against all of its
    /// non-neighbors, plus every non-adjacent pair of neighbors of `s`,
    /// taking the minimum vertex cut over the vertex-split flow network.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(Error::BadParameter("empty graph".into()));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.is_complete() {
            return Ok(n - 1);
        }
        let s = (0..n).min_by_key(|&v| self.degree(v)).expect("n > 0");
        let mut best = n - 1;
        for t in 0..n {
            if t != s && !self.has_edge(s, t) {
                best = best.min(flow::min_vertex_cut(self, s, t, best));
            }
        }
        let nbrs = self.adj[s].clone();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (u, w) = (nbrs[i], nbrs[j]);
                if !self.has_edge(u, w) {
                    best = best.min(flow::min_vertex_cut(self, u, w, best));
                }
            }
        }
        Ok(best)
    }

    /// Two internally vertex-disjoint s-t paths, found as a flow of value 2
    /// on the vertex-split network. Their union is always a simple cycle
    /// through `s` and `t` (when s and t are adjacent, one of the paths may
    /// be the edge itself).
    pub fn two_disjoint_paths(&self, s: usize, t: usize) -> Result<VertexPairPaths> {
        let n = self.vertex_count();
        if s >= n {
            return Err(Error::IndexOutOfRange { index: s, n });
        }
        if t >= n {
            return Err(Error::IndexOutOfRange { index: t, n });
        }
        if s == t {
            return Err(Error::BadParameter("endpoints must differ".into()));
        }
        let mut paths = flow::vertex_disjoint_st_paths(self, s, t, 2);
        if paths.len() < 2 {
            return Err(Error::NotTwoConnectedBetween { s, t });
        }
        paths.sort();
        let mut it = paths.into_iter();
        Ok(VertexPairPaths {
            path_a: it.next().expect("two paths"),
            path_b: it.next().expect("two paths"),
        })
    }

    /// Size of the largest pairwise non-adjacent subset of `x`, by
    /// exhaustive branch-and-bound. Budgeted at |x| <= 20.
    pub fn subset_independence_number(&self, x: &BTreeSet<usize>) -> Result<usize> {
        const BUDGET: usize = 20;
        if x.len() > BUDGET {
            return Err(Error::SubsetTooLarge {
                size: x.len(),
                budget: BUDGET,
            });
        }
        let xs: Vec<usize> = x.iter().copied().collect();
        let k = xs.len();
        let mut mask = vec![0u32; k];
        for i in 0..k {
            for j in 0..k {
                if i != j && self.has_edge(xs[i], xs[j]) {
                    mask[i] |= 1 << j;
                }
            }
        }
        fn mis(cands: u32, mask: &[u32]) -> u32 {
            if cands == 0 {
                return 0;
            }
            let i = cands.trailing_zeros() as usize;
            let rest = cands & !(1u32 << i);
            let without = mis(rest, mask);
            let with = 1 + mis(rest & !mask[i], mask);
            without.max(with)
        }
        let all = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        Ok(mis(all, &mask) as usize)
    }

    /// Minimum degree sum over non-adjacent pairs within `x`;
    /// `Infinite` when `x` induces a clique (no such pair exists).
    pub fn sigma2(&self, x: &BTreeSet<usize>) -> Sigma2 {
        let xs: Vec<usize> = x.iter().copied().collect();
        let mut best: Option<usize> = None;
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                if !self.has_edge(xs[i], xs[j]) {
                    let sum = self.degree(xs[i]) + self.degree(xs[j]);
                    best = Some(best.map_or(sum, |b: usize| b.min(sum)));
                }
            }
        }
        match best {
            Some(v) => Sigma2::Finite(v),
            None => Sigma2::Infinite,
        }
    }
}

/// Minimum degree sum over independent pairs of a vertex subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma2 {
    Finite(usize),
    Infinite,
}

impl Sigma2 {
    pub fn at_least(&self, bound: usize) -> bool {
        match self {
            Sigma2::Finite(v) => *v >= bound,
            Sigma2::Infinite => true,
        }
    }
}

/// Two internally vertex-disjoint paths sharing only their endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPairPaths {
    pub path_a: Vec<usize>,
    pub path_b: Vec<usize>,
}

impl VertexPairPaths {
    /// The simple cycle formed by the two paths: `path_a` forward, then the
    /// interior of `path_b` backward.
    pub fn cycle(&self) -> Vec<usize> {
        let mut seq = self.path_a.clone();
        for &v in self.path_b[1..self.path_b.len() - 1].iter().rev() {
            seq.push(v);
        }
        seq
    }
}

/// All-pairs shortest-path table under unit edge lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    dist: Vec<u32>,
}

/// Breadth-first distances for all pairs; errors if any pair is unreachable.
pub fn shortest_path_metric(g: &Graph) -> Result<Metric> {
    let n = g.vertex_count();
    let mut dist = vec![0u32; n * n];
    for s in 0..n {
        let row = g.bfs_distances(s);
        if row.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
        dist[s * n..(s + 1) * n].copy_from_slice(&row);
    }
    Ok(Metric { n, dist })
}

impl Metric {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Total metric length of a closed stop sequence (consecutive hops plus
    /// the wrap-around hop).
    pub fn closed_length(&self, stops: &[usize]) -> usize {
        if stops.len() < 2 {
            return 0;
        }
        let mut total = 0;
        for w in stops.windows(2) {
            total += self.dist(w[0], w[1]);
        }
        total + self.dist(stops[stops.len() - 1], stops[0])
    }
}

/// Biconnectivity of the subgraph induced by an edge set on its support
/// (vertices of nonzero degree). Used to validate accumulated back-edge
/// selections whose support may be a strict subset of the host graph.
pub(crate) fn support_biconnected(n: usize, edges: &[(usize, usize)]) -> bool {
    // (neighbor, edge id) lists; parallel edges between the same pair count
    // as a cycle, so the DFS tracks the parent edge id, not the parent vertex.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    let support: Vec<usize> = (0..n).filter(|&v| !adj[v].is_empty()).collect();
    if support.len() < 3 {
        return false;
    }
    let root = support[0];
    let mut num = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut next = vec![0usize; n];
    let mut stack = vec![root];
    num[root] = 1;
    low[root] = 1;
    let mut counter = 1usize;
    let mut root_children = 0usize;
    while let Some(&u) = stack.last() {
        if next[u] < adj[u].len() {
            let (w, id) = adj[u][next[u]];
            next[u] += 1;
            if num[w] == 0 {
                counter += 1;
                num[w] = counter;
                low[w] = counter;
                parent_edge[w] = id;
                if u == root {
                    root_children += 1;
                }
                stack.push(w);
            } else if id != parent_edge[u] {
                low[u] = low[u].min(num[w]);
            }
        } else {
            stack.pop();
            if let Some(&p) = stack.last() {
                low[p] = low[p].min(low[u]);
                if p != root && low[u] >= num[p] {
                    return false;
                }
            }
        }
    }
    counter == support.len() && root_children == 1
}

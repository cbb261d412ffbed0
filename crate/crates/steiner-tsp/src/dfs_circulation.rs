//! Depth-first spanning trees, greedy back-edge selection building a
//! biconnected subgraph, and the circulation-cost certificate with the
//! (4n + 2k)/3 bound for a DFS tree with k leaves.
//!
//! The certificate is an upper-bound witness only: the selected subgraph is
//! verified biconnected and its per-vertex cost sums to at most k. No tour
//! is extracted here.

use crate::error::{Error, Result};
use crate::graph::{support_biconnected, Graph};
use crate::Rational;

/// A rooted DFS spanning tree with entry order, leaves in discovery order,
/// and all non-tree edges classified as (descendant, ancestor) back edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsTree {
    root: usize,
    parent: Vec<usize>, // usize::MAX at the root
    order: Vec<usize>,  // entry time per vertex, root = 0
    children: Vec<Vec<usize>>,
    leaves: Vec<usize>,
    back_edges: Vec<(usize, usize)>, // (descendant, ancestor)
}

impl DfsTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (self.parent[v] != usize::MAX).then(|| self.parent[v])
    }

    /// Entry time of `v` in the DFS (root = 0).
    pub fn entry(&self, v: usize) -> usize {
        self.order[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Vertices without tree children, in DFS discovery order. The root is
    /// never a leaf.
    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// Non-tree edges, each joining a vertex to a proper ancestor.
    pub fn back_edges(&self) -> &[(usize, usize)] {
        &self.back_edges
    }

    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        (0..self.parent.len())
            .filter(|&v| self.parent[v] != usize::MAX)
            .map(|v| (self.parent[v], v))
            .collect()
    }

    /// Root-to-`v` vertex sequence.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while self.parent[cur] != usize::MAX {
            cur = self.parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Depth-first spanning tree from `root`, deterministic in the adjacency
/// order. Every non-tree edge of an undirected DFS joins a vertex to an
/// ancestor; this is checked while classifying.
pub fn dfs_tree(g: &Graph, root: usize) -> Result<DfsTree> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::IndexOutOfRange { index: root, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![usize::MAX; n];
    let mut exit = vec![usize::MAX; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next = vec![0usize; n];
    let mut stack = vec![root];
    order[root] = 0;
    let mut counter = 1usize;
    let mut clock = 1usize;
    while let Some(&u) = stack.last() {
        if next[u] < g.neighbors(u).len() {
            let w = g.neighbors(u)[next[u]];
            next[u] += 1;
            if order[w] == usize::MAX {
                order[w] = counter;
                counter += 1;
                parent[w] = u;
                children[u].push(w);
                stack.push(w);
            }
        } else {
            exit[u] = clock;
            clock += 1;
            stack.pop();
        }
    }
    let mut leaves: Vec<usize> = (0..n).filter(|&v| children[v].is_empty()).collect();
    leaves.sort_by_key(|&v| order[v]);
    let mut back_edges = Vec::new();
    for (u, v) in g.edges() {
        if parent[u] == v || parent[v] == u {
            continue;
        }
        let (desc, anc) = if order[u] > order[v] { (u, v) } else { (v, u) };
        // ancestor check: anc entered before desc and exited after it
        debug_assert!(order[anc] < order[desc] && exit[anc] > exit[desc]);
        back_edges.push((desc, anc));
    }
    Ok(DfsTree {
        root,
        parent,
        order,
        children,
        leaves,
        back_edges,
    })
}

/// Back-edge selection certificate: the chosen edges 2-connect the DFS tree,
/// and the per-vertex costs max(0, incoming - children) sum to at most the
/// leaf count k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculationCertificate {
    pub selected_back_edges: Vec<(usize, usize)>,
    pub per_vertex_cost: Vec<usize>,
    pub total_cost: usize,
    pub k: usize,
    pub bound: Rational,
}

/// Processes root-leaf paths in DFS discovery order. Each new path segment
/// is joined to the already-built subgraph by a greedy deepest-to-shallowest
/// back-edge chain: first the leaf's back edge to its shallowest reachable
/// ancestor, then repeatedly an edge jumping over the current reach point
/// (entry(ancestor) < reach < entry(descendant), smallest ancestor entry
/// first) until the chain passes the path's branch point. A chain that runs
/// out of candidates defers: the segment's second connection then runs
/// through a subtree whose leaves are processed later. After the last path a
/// repair sweep jumps any remaining articulation vertex, and the accumulated
/// subgraph is asserted biconnected.
pub fn select_back_edges(g: &Graph, t: &DfsTree) -> Result<CirculationCertificate> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let n = g.vertex_count();
    let mut in_subgraph = vec![false; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut selected: Vec<(usize, usize)> = Vec::new();
    let mut incoming = vec![0usize; n];
    let mut used = vec![false; t.back_edges().len()];
    let pick = |edges: &mut Vec<(usize, usize)>,
                selected: &mut Vec<(usize, usize)>,
                incoming: &mut Vec<usize>,
                used: &mut Vec<bool>,
                idx: usize| {
        let (desc, anc) = t.back_edges()[idx];
        used[idx] = true;
        edges.push((desc, anc));
        selected.push((desc, anc));
        incoming[anc] += 1;
        t.entry(anc)
    };
    for &leaf in t.leaves() {
        let path = t.path_from_root(leaf);
        let seg_start = path
            .iter()
            .position(|&v| !in_subgraph[v])
            .expect("a leaf is never already covered");
        let branch_entry = if seg_start == 0 {
            0 // first path: drive the chain to the root
        } else {
            t.entry(path[seg_start - 1])
        };
        for i in seg_start.max(1)..path.len() {
            edges.push((path[i - 1], path[i]));
        }
        for &v in &path {
            in_subgraph[v] = true;
        }
        let in_segment = |v: usize| path[seg_start..].contains(&v);
        // The leaf's back edge with the shallowest target starts the chain.
        let mut first: Option<(usize, usize)> = None; // (anc entry, idx)
        for (idx, &(desc, anc)) in t.back_edges().iter().enumerate() {
            if desc == leaf && !used[idx] {
                let key = t.entry(anc);
                if first.is_none_or(|(e, _)| key < e) {
                    first = Some((key, idx));
                }
            }
        }
        let Some((first_entry, idx)) = first else {
            return Err(Error::SelectionFailed);
        };
        let mut reach = pick(&mut edges, &mut selected, &mut incoming, &mut used, idx);
        debug_assert_eq!(reach, first_entry);
        loop {
            if reach < branch_entry {
                break; // chain passed the branch point
            }
            if reach == branch_entry {
                if seg_start == 0 {
                    break; // first path: the chain reached the root
                }
                let branch_vertex = path[seg_start - 1];
                let cut = cut_components(n, &edges, branch_vertex, t.root());
                if !path[seg_start..].iter().any(|v| cut.contains(v)) {
                    break; // the branch point does not separate the segment
                }
            }
            let mut best: Option<(usize, usize, usize)> = None; // (anc entry, desc entry, idx)
            for (idx, &(desc, anc)) in t.back_edges().iter().enumerate() {
                if used[idx] || !in_segment(desc) {
                    continue;
                }
                if t.entry(desc) > reach && t.entry(anc) < reach {
                    let key = (t.entry(anc), t.entry(desc), idx);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
            match best {
                Some((_, _, idx)) => {
                    reach = pick(&mut edges, &mut selected, &mut incoming, &mut used, idx);
                }
                None => break, // defer: the second connection runs through a later subtree
            }
        }
    }
    // Repair sweep: jump any articulation vertex that survived deferral.
    while !support_biconnected(n, &edges) {
        let mut progressed = false;
        'repair: for a in 0..n {
            if !in_subgraph[a] {
                continue;
            }
            let cut_off = cut_components(n, &edges, a, t.root());
            if cut_off.is_empty() {
                continue;
            }
            for (idx, &(desc, anc)) in t.back_edges().iter().enumerate() {
                if !used[idx] && cut_off.contains(&desc) && !cut_off.contains(&anc) && anc != a {
                    pick(&mut edges, &mut selected, &mut incoming, &mut used, idx);
                    progressed = true;
                    break 'repair;
                }
            }
        }
        if !progressed {
            return Err(Error::SelectionFailed);
        }
    }
    assert!(
        support_biconnected(n, &edges),
        "selected subgraph must be biconnected"
    );
    let per_vertex_cost: Vec<usize> = (0..n)
        .map(|v| incoming[v].saturating_sub(t.children(v).len()))
        .collect();
    let total_cost: usize = per_vertex_cost.iter().sum();
    let k = t.leaf_count();
    assert!(
        total_cost <= k,
        "circulation cost {total_cost} exceeds leaf count {k}"
    );
    Ok(CirculationCertificate {
        selected_back_edges: selected,
        per_vertex_cost,
        total_cost,
        k,
        bound: ms_bound(n, k),
    })
}

/// Exact rational (4n + 2k)/3.
pub fn ms_bound(n: usize, k: usize) -> Rational {
    debug_assert!(n >= 3 && k >= 1);
    Rational::new(4 * n as i64 + 2 * k as i64, 3)
}

/// Support vertices separated from the root's side when `removed` is
/// deleted from the edge set. When `removed` is the root itself, the sweep
/// anchors at one of its neighbors instead.
fn cut_components(
    n: usize,
    edges: &[(usize, usize)],
    removed: usize,
    root: usize,
) -> std::collections::BTreeSet<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut support = vec![false; n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
        support[u] = true;
        support[v] = true;
    }
    if !support[removed] {
        return Default::default();
    }
    let anchor = if removed == root {
        match adj[root].iter().copied().find(|&w| w != removed) {
            Some(w) => w,
            None => return Default::default(),
        }
    } else {
        root
    };
    let mut seen = vec![false; n];
    seen[removed] = true;
    seen[anchor] = true;
    let mut stack = vec![anchor];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n)
        .filter(|&v| support[v] && !seen[v] && v != removed)
        .collect()
}

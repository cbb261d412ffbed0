//! Unit-capacity maximum flow on the vertex-split network, used for vertex
//! connectivity, disjoint path pairs, and cycle-augmentation fans.
//!
//! Every vertex v becomes an arc in(v) -> out(v) of capacity 1 (uncapacitated
//! for designated terminals); every edge {u, v} becomes out(u) -> in(v) and
//! out(v) -> in(u) of capacity 1. Augmentation is breadth-first, so shortest
//! augmenting paths are used and results are deterministic for a fixed
//! adjacency order.

use std::collections::VecDeque;

use crate::graph::Graph;

struct FlowNet {
    to: Vec<usize>,
    cap: Vec<i32>,
    head: Vec<Vec<usize>>, // arc ids per node
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        Self {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: i32) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.head[u].push(id);
        self.to.push(u);
        self.cap.push(0);
        self.head[v].push(id + 1);
        id
    }

    /// One unit of augmentation along a shortest residual path.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred: Vec<usize> = vec![usize::MAX; self.head.len()];
        pred[s] = usize::MAX - 1;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                if self.cap[a] > 0 {
                    let w = self.to[a];
                    if pred[w] == usize::MAX {
                        pred[w] = a;
                        if w == t {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
        }
        if pred[t] == usize::MAX {
            return false;
        }
        let mut w = t;
        while w != s {
            let a = pred[w];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            w = self.to[a ^ 1];
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut value = 0;
        while value < limit && self.augment(s, t) {
            value += 1;
        }
        value
    }

    /// Flow actually routed through an arc added with `add_arc`.
    fn flow_on(&self, arc: usize) -> i32 {
        self.cap[arc ^ 1]
    }
}

const BIG: i32 = i32::MAX / 4;

fn in_node(v: usize) -> usize {
    2 * v
}

fn out_node(v: usize) -> usize {
    2 * v + 1
}

fn split_network(g: &Graph, uncapped: &[usize]) -> (FlowNet, Vec<usize>) {
    let n = g.vertex_count();
    let mut net = FlowNet::new(2 * n);
    let mut inner = vec![usize::MAX; n];
    for v in 0..n {
        let cap = if uncapped.contains(&v) { BIG } else { 1 };
        inner[v] = net.add_arc(in_node(v), out_node(v), cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(out_node(u), in_node(v), 1);
        net.add_arc(out_node(v), in_node(u), 1);
    }
    (net, inner)
}

/// Size of a minimum s-t vertex cut (equivalently, the maximum number of
/// internally vertex-disjoint s-t paths). Stops early once `cap` is reached
/// since callers only track a running minimum.
pub(crate) fn min_vertex_cut(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let (mut net, _) = split_network(g, &[s, t]);
    net.max_flow(out_node(s), in_node(t), cap)
}

/// Up to `want` internally vertex-disjoint s-t paths, each simple, as vertex
/// sequences from s to t.
pub(crate) fn vertex_disjoint_st_paths(
    g: &Graph,
    s: usize,
    t: usize,
    want: usize,
) -> Vec<Vec<usize>> {
    let (mut net, _) = split_network(g, &[s, t]);
    let value = net.max_flow(out_node(s), in_node(t), want);
    decompose(g, &net, s, |v| v == t, value)
}

/// A fan of internally vertex-disjoint paths from `v` to distinct vertices of
/// `targets`, meeting `targets` only at their endpoints.
pub(crate) fn fan_paths(g: &Graph, v: usize, targets: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let sink = 2 * n;
    let mut net = FlowNet::new(2 * n + 1);
    let mut is_target = vec![false; n];
    for &u in targets {
        is_target[u] = true;
    }
    for w in 0..n {
        if is_target[w] {
            net.add_arc(in_node(w), sink, 1);
        } else if w != v {
            net.add_arc(in_node(w), out_node(w), 1);
        }
    }
    for (a, b) in g.edges() {
        net.add_arc(out_node(a), in_node(b), 1);
        net.add_arc(out_node(b), in_node(a), 1);
    }
    let value = net.max_flow(out_node(v), sink, targets.len());
    decompose(g, &net, v, |w| is_target[w], value)
}

/// Walks saturated arcs from `source` to recover `count` vertex paths, each
/// ending at the first vertex satisfying `is_end`. Consumes flow as it goes;
/// unit vertex capacities make every recovered path simple and the paths
/// pairwise internally disjoint.
fn decompose<F: Fn(usize) -> bool>(
    _g: &Graph,
    net: &FlowNet,
    source: usize,
    is_end: F,
    count: usize,
) -> Vec<Vec<usize>> {
    // Remaining flow per edge arc, keyed by arc id.
    let mut residual: Vec<i32> = (0..net.to.len()).map(|a| net.flow_on(a & !1)).collect();
    // residual[a] above is only meaningful for even (forward) arcs.
    let mut paths = Vec::with_capacity(count);
    for _ in 0..count {
        let mut path = vec![source];
        let mut cur = source;
        loop {
            let mut advanced = false;
            for &a in &net.head[out_node(cur)] {
                if a % 2 == 0 && residual[a] > 0 {
                    let next_in = net.to[a];
                    let w = next_in / 2;
                    residual[a] -= 1;
                    path.push(w);
                    cur = w;
                    advanced = true;
                    break;
                }
            }
            assert!(advanced, "flow decomposition ran out of saturated arcs");
            if is_end(cur) {
                break;
            }
        }
        paths.push(path);
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn cut_separates_theta_graph() {
        // 6-cycle plus chord (0,3): cut between 0 and 3 is 3, between 1 and 4 is 2.
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        assert_eq!(min_vertex_cut(&g, 0, 3, 10), 3);
        assert_eq!(min_vertex_cut(&g, 1, 4, 10), 2);
    }

    #[test]
    fn disjoint_paths_are_disjoint() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let paths = vertex_disjoint_st_paths(&g, 0, 3, 3);
        assert_eq!(paths.len(), 3);
        let mut seen = std::collections::BTreeSet::new();
        for p in &paths {
            assert_eq!(p[0], 0);
            assert_eq!(*p.last().unwrap(), 3);
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
            for &v in &p[1..p.len() - 1] {
                assert!(seen.insert(v), "interior vertex reused: {v}");
            }
        }
    }

    #[test]
    fn fan_reaches_distinct_targets() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let fan = fan_paths(&g, 1, &[4, 5, 0]);
        assert!(fan.len() >= 2);
        let mut ends = std::collections::BTreeSet::new();
        for p in &fan {
            assert_eq!(p[0], 1);
            let end = *p.last().unwrap();
            assert!([4, 5, 0].contains(&end));
            assert!(ends.insert(end));
            // Interior avoids the target set.
            for &v in &p[1..p.len() - 1] {
                assert!(![4, 5, 0].contains(&v));
            }
        }
    }
}

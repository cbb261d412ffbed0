//! Exact brute-force ground truth at desk scale: optimal graph-TSP length by
//! bitmask dynamic programming over the metric closure, exhaustive simple
//! Steiner-cycle search with sound pruning, and cyclability checks.
//!
//! Both heavy searches have a data-parallel implementation (over the first
//! DFS branch, and over the masks of one subset-size layer) and a sequential
//! fallback selected by the `parallel` feature. Results are deterministic
//! either way: pruning keeps all minimum-length candidates alive and ties
//! break on the lexicographically smallest canonical cycle.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Metric};
use crate::steiner::{ClosedWalk, SteinerCycle};

/// Hard ceiling for the subset DP.
pub const HELD_KARP_MAX_N: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub opt_length: usize,
    /// One optimal visiting order (each vertex once, closed cyclically).
    pub opt_tour: Vec<usize>,
}

/// Exact minimum tour length over the metric closure, with one optimal tour
/// reconstructed. Uses the parallel layer sweep when the `parallel` feature
/// is enabled.
pub fn held_karp_opt(metric: &Metric) -> Result<OptResult> {
    #[cfg(feature = "parallel")]
    {
        held_karp_impl(metric, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        held_karp_impl(metric, false)
    }
}

/// Sequential fallback of [`held_karp_opt`]; this is what the `parallel`
/// feature disables down to, exposed for benchmarking the two side by side.
pub fn held_karp_opt_seq(metric: &Metric) -> Result<OptResult> {
    held_karp_impl(metric, false)
}

const INF: u32 = u32::MAX / 2;

#[inline(never)]
fn fill_layer_seq(
    metric: &Metric,
    n: usize,
    masks: &[usize],
    cur: &mut [u32],
    parent: &mut [u8],
    prev: &[u32],
) {
    for &mask in masks {
        let base = mask * n;
        fill_row(
            metric,
            n,
            mask,
            &mut cur[base..base + n],
            &mut parent[base..base + n],
            prev,
        );
    }
}

#[cfg(feature = "parallel")]
#[inline(never)]
fn fill_layer_par(
    metric: &Metric,
    n: usize,
    masks: &[usize],
    cur: &mut [u32],
    parent: &mut [u8],
    prev: &[u32],
) {
    let rows: Vec<(usize, Vec<u32>, Vec<u8>)> = masks
        .par_iter()
        .map(|&mask| {
            let mut row = vec![INF; n];
            let mut par = vec![u8::MAX; n];
            fill_row(metric, n, mask, &mut row, &mut par, prev);
            (mask, row, par)
        })
        .collect();
    for (mask, row, par) in rows {
        cur[mask * n..mask * n + n].copy_from_slice(&row);
        parent[mask * n..mask * n + n].copy_from_slice(&par);
    }
}

/// One pull-DP row: best path costs ending at each v of `mask`, reading only
/// the previous subset layer.
#[inline]
fn fill_row(metric: &Metric, n: usize, mask: usize, row: &mut [u32], par: &mut [u8], prev: &[u32]) {
    let mut rest = mask & !1usize;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let sub = mask ^ (1 << v);
        let mut best = INF;
        let mut best_u = u8::MAX;
        let mut us = sub;
        while us != 0 {
            let u = us.trailing_zeros() as usize;
            us &= us - 1;
            // dp[sub][0] is only meaningful for sub = {0}: paths start at 0
            // and never return to it mid-way.
            if u == 0 && sub != 1 {
                continue;
            }
            let c = prev[sub * n + u];
            if c < INF {
                let cand = c + metric.dist(u, v) as u32;
                if cand < best {
                    best = cand;
                    best_u = u as u8;
                }
            }
        }
        row[v] = best;
        par[v] = best_u;
    }
}

fn held_karp_impl(metric: &Metric, parallel: bool) -> Result<OptResult> {
    let n = metric.n();
    if n > HELD_KARP_MAX_N {
        return Err(Error::TooLarge {
            n,
            budget: HELD_KARP_MAX_N,
        });
    }
    if n == 0 {
        return Err(Error::BadParameter("empty metric".into()));
    }
    if n == 1 {
        return Ok(OptResult {
            opt_length: 0,
            opt_tour: vec![0],
        });
    }
    let full: usize = (1 << n) - 1;
    // Pull-style DP layered by subset size: entries of layer p only read
    // layer p-1, so masks within one layer are independent.
    let mut prev = vec![INF; (full + 1) * n];
    let mut cur = vec![INF; (full + 1) * n];
    let mut parent = vec![u8::MAX; (full + 1) * n];
    prev[n] = 0; // mask {0}, last vertex 0 (index 1*n + 0)
    let mut layers: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1..=full {
        if mask & 1 == 1 {
            layers[mask.count_ones() as usize].push(mask);
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    for p in 2..=n {
        // Below this many masks the fork-join overhead outweighs the row work.
        const PAR_LAYER_MIN: usize = 4096;
        #[cfg(feature = "parallel")]
        let filled = if parallel && layers[p].len() >= PAR_LAYER_MIN {
            fill_layer_par(metric, n, &layers[p], &mut cur, &mut parent, &prev);
            true
        } else {
            false
        };
        #[cfg(not(feature = "parallel"))]
        let filled = false;
        if !filled {
            fill_layer_seq(metric, n, &layers[p], &mut cur, &mut parent, &prev);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    // After the final swap, `prev` holds layer n.
    let mut best = INF;
    let mut best_v = usize::MAX;
    for v in 1..n {
        let c = prev[full * n + v];
        if c < INF {
            let cand = c + metric.dist(v, 0) as u32;
            if cand < best {
                best = cand;
                best_v = v;
            }
        }
    }
    if best >= INF {
        return Err(Error::Disconnected);
    }
    let mut tour = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = best_v;
    while v != 0 {
        tour.push(v);
        let u = parent[mask * n + v] as usize;
        mask ^= 1 << v;
        v = u;
    }
    tour.push(0);
    tour.reverse();
    Ok(OptResult {
        opt_length: best as usize,
        opt_tour: tour,
    })
}

/// Result of the exhaustive simple-cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    /// Shortest simple cycle containing the required set; ties resolve to
    /// the lexicographically smallest canonical form.
    Found(SteinerCycle),
    /// Complete enumeration finished without a candidate: no simple cycle
    /// through the required set exists.
    ProvenAbsent,
}

/// Exhaustive search for the shortest simple cycle containing `s`, by DFS
/// over simple paths. Branches that cannot reach every remaining required
/// vertex (or close back to the start) are abandoned; pruning is strict on
/// length so all minimum-length candidates survive, keeping the result
/// deterministic under parallel branch exploration.
pub fn brute_force_steiner_cycle(
    g: &Graph,
    s: &BTreeSet<usize>,
    max_n: usize,
) -> Result<CycleSearch> {
    #[cfg(feature = "parallel")]
    {
        brute_force_impl(g, s, max_n, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        brute_force_impl(g, s, max_n, false)
    }
}

/// Sequential fallback of [`brute_force_steiner_cycle`].
pub fn brute_force_steiner_cycle_seq(
    g: &Graph,
    s: &BTreeSet<usize>,
    max_n: usize,
) -> Result<CycleSearch> {
    brute_force_impl(g, s, max_n, false)
}

fn brute_force_impl(
    g: &Graph,
    s: &BTreeSet<usize>,
    max_n: usize,
    parallel: bool,
) -> Result<CycleSearch> {
    let n = g.vertex_count();
    let cap = max_n.min(31); // visited sets are u32 bitmasks
    if n > cap {
        return Err(Error::TooLarge { n, budget: cap });
    }
    if s.is_empty() {
        return Err(Error::BadParameter("required set is empty".into()));
    }
    for &v in s {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
    }
    let start = *s.iter().next().expect("non-empty");
    let mut s_mask = 0u32;
    for &v in s {
        s_mask |= 1 << v;
    }
    let bound = AtomicUsize::new(usize::MAX);
    let run_branch = |w: usize| -> Option<(usize, Vec<usize>)> {
        let mut state = DfsState {
            g,
            start,
            s_mask,
            path: vec![start, w],
            visited: (1u32 << start) | (1u32 << w),
            best: None,
            bound: &bound,
        };
        state.run();
        state.best
    };
    let branches: Vec<usize> = g.neighbors(start).to_vec();
    let candidates: Vec<Option<(usize, Vec<usize>)>> = {
        #[cfg(feature = "parallel")]
        {
            if parallel {
                branches.par_iter().map(|&w| run_branch(w)).collect()
            } else {
                branches.iter().map(|&w| run_branch(w)).collect()
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = parallel;
            branches.iter().map(|&w| run_branch(w)).collect()
        }
    };
    let best = candidates
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    match best {
        Some((_, seq)) => {
            let walk = ClosedWalk::new(g, seq)?;
            debug_assert!(walk.is_simple());
            Ok(CycleSearch::Found(SteinerCycle::new(walk, s.clone())?))
        }
        None => Ok(CycleSearch::ProvenAbsent),
    }
}

struct DfsState<'a> {
    g: &'a Graph,
    start: usize,
    s_mask: u32,
    path: Vec<usize>,
    visited: u32,
    best: Option<(usize, Vec<usize>)>,
    bound: &'a AtomicUsize,
}

impl DfsState<'_> {
    fn run(&mut self) {
        if !self.viable() {
            return;
        }
        self.dfs();
    }

    fn remaining_required(&self) -> u32 {
        self.s_mask & !self.visited
    }

    /// Every remaining required vertex and the start must be reachable from
    /// the path head through unvisited vertices.
    fn viable(&self) -> bool {
        let head = *self.path.last().unwrap();
        let blocked = self.visited & !(1u32 << self.start);
        let mut reach = 1u32 << head;
        let mut queue = vec![head];
        while let Some(u) = queue.pop() {
            for &w in self.g.neighbors(u) {
                let bit = 1u32 << w;
                if reach & bit == 0 && blocked & bit == 0 {
                    reach |= bit;
                    queue.push(w);
                }
            }
        }
        let need = self.remaining_required() | (1u32 << self.start);
        reach & need == need
    }

    fn dfs(&mut self) {
        let head = *self.path.last().unwrap();
        let lower = self.path.len() + self.remaining_required().count_ones() as usize;
        if lower > self.bound.load(Ordering::Relaxed) {
            return;
        }
        for idx in 0..self.g.neighbors(head).len() {
            let w = self.g.neighbors(head)[idx];
            if w == self.start {
                if self.path.len() >= 3 && self.remaining_required() == 0 && self.path[1] < head {
                    self.record_candidate();
                }
                continue;
            }
            let bit = 1u32 << w;
            if self.visited & bit != 0 {
                continue;
            }
            self.visited |= bit;
            self.path.push(w);
            let lower = self.path.len() + self.remaining_required().count_ones() as usize;
            if lower <= self.bound.load(Ordering::Relaxed) && self.viable() {
                self.dfs();
            }
            self.path.pop();
            self.visited &= !bit;
        }
    }

    fn record_candidate(&mut self) {
        let len = self.path.len();
        if len > self.bound.load(Ordering::Relaxed) {
            return;
        }
        let canon = canonical_cycle(&self.path);
        let better = match &self.best {
            None => true,
            Some((bl, bc)) => len < *bl || (len == *bl && canon < *bc),
        };
        if better {
            self.best = Some((len, canon));
            self.bound.fetch_min(len, Ordering::Relaxed);
        }
    }
}

/// Rotates a cyclic vertex sequence to start at its minimum vertex and picks
/// the lexicographically smaller direction.
fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let pos = (0..k).min_by_key(|&i| seq[i]).unwrap();
    let fwd: Vec<usize> = (0..k).map(|i| seq[(pos + i) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|i| seq[(pos + k - i) % k]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

/// True iff some simple cycle contains `x`.
pub fn is_cyclable(g: &Graph, x: &BTreeSet<usize>) -> Result<bool> {
    Ok(matches!(
        brute_force_steiner_cycle(g, x, HELD_KARP_MAX_N)?,
        CycleSearch::Found(_)
    ))
}

const SUBSET_SWEEP_BUDGET: usize = 200_000;

/// True iff every vertex subset of size at most `c` is cyclable. Since
/// cyclability is downward monotone and any smaller set extends to a size-c
/// superset, checking the size-c subsets alone suffices.
pub fn cyc_at_least(g: &Graph, c: usize) -> Result<bool> {
    let n = g.vertex_count();
    let c = c.min(n);
    if c == 0 {
        return Ok(true);
    }
    let combos = binomial(n, c);
    if combos > SUBSET_SWEEP_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "C({n},{c}) = {combos} subsets exceeds the sweep budget"
        )));
    }
    let mut idx: Vec<usize> = (0..c).collect();
    loop {
        let x: BTreeSet<usize> = idx.iter().copied().collect();
        if !is_cyclable(g, &x)? {
            return Ok(false);
        }
        // next combination in lexicographic order
        let mut i = c;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] != i + n - c {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..c {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

//! Branch and bound over isolation pairs `(S, I)`.
//!
//! Deleting `T(S, I) = E(G[I]) + E[I, V - S - I]` leaves every vertex of
//! `I` isolated in `G - T - S`, so `|I| = |S| + 1` kills every fractional
//! perfect matching. Conversely an optimal deletion set isolates some such
//! `I`, hence `fmp(G) = min |T(S, I)|`.
//!
//! With `R = V - S` and `d_R(v) = |N(v) & R|`:
//! `|T| = sum_{v in I} d_R(v) - e(G[I])`. Every bound below is kept in
//! halves: a vertex `w` still to be added, whose residual degree is `m`
//! after discounting already chosen neighbours, contributes at least
//! `max(m, 2m - (q - 1)) / 2` when `q` vertices remain to be chosen.
//!
//! Pairs are visited by `|S|`, then `S` lexicographically, then `I`
//! lexicographically, and only strict improvements replace the incumbent,
//! so the reported witness is the first optimum in that order.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bits, Combinations, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Pair {
    pub cost: usize,
    pub s: u64,
    pub i: u64,
}

#[inline]
fn bound_term(m: u32, q: u32) -> u32 {
    m.max((2 * m + 1).saturating_sub(q))
}

/// Sum of the `k` smallest values.
#[inline]
fn smallest_sum(vals: &mut [u32], k: usize) -> u32 {
    if k == 0 {
        return 0;
    }
    if k < vals.len() {
        vals.select_nth_unstable(k - 1);
    }
    vals[..k].iter().sum()
}

/// Search `I` for a fixed `S`, returning the first `I` (lexicographic)
/// with the least cost strictly below `bound`.
struct Inner<'a> {
    g: &'a Graph,
    cand: Vec<usize>,
    d_r: [u32; 64],
    t: usize,
    best: usize,
    best_i: Option<u64>,
    stop_at: usize,
    scratch: Vec<u32>,
    nodes: u64,
    deadline: Option<Instant>,
    abort: &'a AtomicBool,
}

impl<'a> Inner<'a> {
    fn run(
        g: &'a Graph,
        s: u64,
        bound: usize,
        stop_at: usize,
        deadline: Option<Instant>,
        abort: &'a AtomicBool,
    ) -> Option<(usize, u64)> {
        let t = s.count_ones() as usize + 1;
        let r = g.vertex_mask() & !s;
        let mut d_r = [0u32; 64];
        let mut cand = Vec::with_capacity(64);
        for v in bits(r) {
            d_r[v] = (g.neighbors(v) & r).count_ones();
            cand.push(v);
        }
        if cand.len() < t {
            return None;
        }
        let mut me = Inner {
            g,
            cand,
            d_r,
            t,
            best: bound,
            best_i: None,
            stop_at,
            scratch: Vec::with_capacity(64),
            nodes: 0,
            deadline,
            abort,
        };
        me.dfs(0, 0, 0, 0);
        me.best_i.map(|i| (me.best, i))
    }

    fn done(&self) -> bool {
        (self.best_i.is_some() && self.best <= self.stop_at) || self.abort.load(Ordering::Relaxed)
    }

    fn dfs(&mut self, pos: usize, chosen: u64, p: usize, cost: usize) {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.abort.store(true, Ordering::Relaxed);
                }
            }
        }
        if p == self.t {
            if cost < self.best {
                self.best = cost;
                self.best_i = Some(chosen);
            }
            return;
        }
        let q = self.t - p;
        let len = self.cand.len();
        if len - pos < q {
            return;
        }
        self.scratch.clear();
        for &w in &self.cand[pos..] {
            let m = self.d_r[w] - (self.g.neighbors(w) & chosen).count_ones();
            self.scratch.push(bound_term(m, q as u32));
        }
        let mut scratch = std::mem::take(&mut self.scratch);
        let lb = 2 * cost as u32 + smallest_sum(&mut scratch, q);
        self.scratch = scratch;
        if lb >= 2 * self.best as u32 {
            return;
        }
        for idx in pos..=len - q {
            let w = self.cand[idx];
            let add = self.d_r[w] - (self.g.neighbors(w) & chosen).count_ones();
            self.dfs(idx + 1, chosen | 1 << w, p + 1, cost + add as usize);
            if self.done() {
                return;
            }
        }
    }
}

/// Lower bound (in halves) on any pair with this `S`.
fn s_bound(g: &Graph, s: u64, t: usize, scratch: &mut Vec<u32>) -> u32 {
    let r = g.vertex_mask() & !s;
    scratch.clear();
    for v in bits(r) {
        scratch.push(bound_term((g.neighbors(v) & r).count_ones(), t as u32));
    }
    smallest_sum(scratch, t)
}

/// Lower bound (in halves) on any pair with `|S| = s`.
fn level_bound(g: &Graph, s: usize, scratch: &mut Vec<u32>) -> u32 {
    let t = s + 1;
    scratch.clear();
    for v in 0..g.order() {
        let d = g.degree(v).saturating_sub(s) as u32;
        scratch.push(bound_term(d, t as u32));
    }
    smallest_sum(scratch, t)
}

/// Initial incumbent: isolate the first vertex of minimum degree.
pub(crate) fn degree_pair(g: &Graph) -> Pair {
    let v = (0..g.order()).min_by_key(|&v| g.degree(v)).expect("non-null graph");
    Pair {
        cost: g.degree(v),
        s: 0,
        i: 1 << v,
    }
}

/// Stop conditions shared by the sequential and parallel drivers.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Limits {
    pub stop_at: usize,
    pub deadline: Option<Instant>,
    pub parallel: bool,
}

fn expired(abort: &AtomicBool) -> Result<()> {
    if abort.load(Ordering::Relaxed) {
        Err(Error::BudgetExhausted("time budget reached during (S, I) search".into()))
    } else {
        Ok(())
    }
}

/// First optimal pair with cost below `best.cost`, or `best` itself.
/// Returns as soon as an improvement reaches `limits.stop_at`.
pub(crate) fn minimise(g: &Graph, best: Pair, limits: Limits) -> Result<Pair> {
    if limits.parallel {
        minimise_parallel(g, best, limits)
    } else {
        minimise_sequential(g, best, limits)
    }
}

fn minimise_sequential(g: &Graph, mut best: Pair, limits: Limits) -> Result<Pair> {
    let n = g.order();
    let abort = AtomicBool::new(false);
    let mut scratch = Vec::with_capacity(64);
    if best.cost <= limits.stop_at {
        return Ok(best);
    }
    for s in 1..=n.saturating_sub(1) / 2 {
        let t = s + 1;
        if level_bound(g, s, &mut scratch) >= 2 * best.cost as u32 {
            continue;
        }
        for smask in Combinations::new(g.vertex_mask(), s) {
            if s_bound(g, smask, t, &mut scratch) >= 2 * best.cost as u32 {
                continue;
            }
            let found = Inner::run(g, smask, best.cost, limits.stop_at, limits.deadline, &abort);
            expired(&abort)?;
            if let Some((cost, i)) = found {
                best = Pair { cost, s: smask, i };
                if cost <= limits.stop_at {
                    return Ok(best);
                }
            }
        }
    }
    Ok(best)
}

/// Each `|S|` level is split across the rayon pool. Every `S` is searched
/// against the incumbent fixed at the start of its level and results merge
/// by (cost, position of `S`), so the answer does not depend on scheduling.
fn minimise_parallel(g: &Graph, mut best: Pair, limits: Limits) -> Result<Pair> {
    let n = g.order();
    let abort = AtomicBool::new(false);
    if best.cost <= limits.stop_at {
        return Ok(best);
    }
    let mut scratch = Vec::with_capacity(64);
    for s in 1..=n.saturating_sub(1) / 2 {
        let t = s + 1;
        if level_bound(g, s, &mut scratch) >= 2 * best.cost as u32 {
            continue;
        }
        let level: Vec<u64> = Combinations::new(g.vertex_mask(), s).collect();
        let bound = best.cost;
        let found = level
            .par_iter()
            .enumerate()
            .filter_map(|(idx, &smask)| {
                let mut scratch = Vec::with_capacity(64);
                if s_bound(g, smask, t, &mut scratch) >= 2 * bound as u32 {
                    return None;
                }
                Inner::run(g, smask, bound, limits.stop_at, limits.deadline, &abort)
                    .map(|(cost, i)| (cost, idx, smask, i))
            })
            .min_by_key(|&(cost, idx, _, _)| (cost, idx));
        expired(&abort)?;
        if let Some((cost, _, smask, i)) = found {
            best = Pair { cost, s: smask, i };
            if cost <= limits.stop_at {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Some pair of cost at most `k`, stopping at the first one found.
pub(crate) fn exists_at_most(g: &Graph, k: usize, limits: Limits) -> Result<Option<Pair>> {
    let start = degree_pair(g);
    if start.cost <= k {
        return Ok(Some(start));
    }
    let sentinel = Pair {
        cost: k + 1,
        s: 0,
        i: 0,
    };
    let got = minimise(g, sentinel, Limits { stop_at: k, ..limits })?;
    Ok((got.cost <= k).then_some(got))
}

/// Cost of an explicit pair.
pub(crate) fn pair_cost(g: &Graph, s: u64, i: u64) -> usize {
    let r = g.vertex_mask() & !s;
    g.edges_within(i) + g.edges_between(i, r & !i)
}

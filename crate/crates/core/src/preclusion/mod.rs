//! Fractional matching preclusion: exact `fmp` via isolation pairs,
//! a literal edge-subset oracle, integral `mp`, and the `fmp <= 1` classifier.

mod brute;
mod classify;
mod mp;
mod search;

pub use brute::{fmp_bruteforce, fmp_bruteforce_with_budget, BRUTE_SUBSET_BUDGET};
pub use classify::{classify_fmp01, CertificateForm, Fmp01};
pub use mp::{mp, mp_with_budget, MP_NODE_BUDGET};

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, EdgeSet, Graph, VertexSet};
use crate::matching::has_fpm;
use search::{degree_pair, Limits, Pair};

/// `T(S, I)`: deleting `T` isolates every vertex of `I` once `S` is removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FmpWitness {
    pub s: VertexSet,
    pub i: VertexSet,
    pub t: EdgeSet,
}

impl FmpWitness {
    /// Build the witness for a pair, computing `T` from `g`.
    pub fn from_sets(g: &Graph, s: VertexSet, i: VertexSet) -> Result<Self> {
        if s.order() != g.order() || i.order() != g.order() {
            return Err(Error::invalid("witness sets have the wrong order"));
        }
        if s.mask() & i.mask() != 0 {
            return Err(Error::invalid("S and I intersect"));
        }
        let outside = g.vertex_mask() & !s.mask() & !i.mask();
        let mut t = Vec::new();
        for u in bits(i.mask()) {
            for v in bits(g.neighbors(u) & (i.mask() | outside)) {
                if !(i.contains(v) && v < u) {
                    t.push((u, v));
                }
            }
        }
        Ok(FmpWitness {
            s,
            i,
            t: EdgeSet::new(g, t)?,
        })
    }

    fn from_pair(g: &Graph, p: Pair) -> Self {
        let n = g.order();
        FmpWitness::from_sets(
            g,
            VertexSet::from_mask(n, p.s).expect("mask within order"),
            VertexSet::from_mask(n, p.i).expect("mask within order"),
        )
        .expect("search produced a consistent pair")
    }

    pub fn cost(&self) -> usize {
        self.t.len()
    }

    /// Check the set sizes, that `T` is exactly `E(G[I]) + E[I, V - S - I]`,
    /// and that `G - T - S` has more than `|S|` isolated vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.i.len() != self.s.len() + 1 {
            return Err(Error::invalid(format!(
                "|I| = {} but |S| = {}",
                self.i.len(),
                self.s.len()
            )));
        }
        let expect = FmpWitness::from_sets(g, self.s, self.i)?;
        if expect.t != self.t {
            return Err(Error::invalid("T is not the edge set isolating I"));
        }
        let isolated = g.delete_edges(&self.t)?.isolated_count(&self.s)?;
        if isolated <= self.s.len() {
            return Err(Error::invalid(format!(
                "G - T - S has {isolated} isolated vertices, |S| = {}",
                self.s.len()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreclusionResult {
    pub value: usize,
    /// Absent exactly when the graph has no fractional perfect matching.
    pub witness: Option<FmpWitness>,
    pub method: Method,
}

/// Knobs for the `(S, I)` search.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    pub parallel: bool,
    pub budget: Option<Duration>,
}

impl SearchOptions {
    pub fn parallel(mut self, yes: bool) -> Self {
        self.parallel = yes;
        self
    }

    pub fn budget(mut self, d: Duration) -> Self {
        self.budget = Some(d);
        self
    }

    fn limits(&self, stop_at: usize) -> Limits {
        Limits {
            stop_at,
            deadline: self.budget.map(|d| Instant::now() + d),
            parallel: self.parallel,
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::invalid("fmp is undefined for the null graph"))
    } else {
        Ok(())
    }
}

/// Exact fractional matching preclusion number, `0` when no fractional
/// perfect matching exists.
pub fn fmp(g: &Graph) -> Result<PreclusionResult> {
    fmp_with(g, &SearchOptions::default())
}

pub fn fmp_with(g: &Graph, opts: &SearchOptions) -> Result<PreclusionResult> {
    check_order(g)?;
    if !has_fpm(g) {
        return Ok(PreclusionResult {
            value: 0,
            witness: None,
            method: Method::Exact,
        });
    }
    // with a fractional perfect matching every pair costs at least 1
    let best = search::minimise(g, degree_pair(g), opts.limits(1))?;
    Ok(PreclusionResult {
        value: best.cost,
        witness: Some(FmpWitness::from_pair(g, best)),
        method: Method::Exact,
    })
}

/// `fmp(g) <= k`, stopping at the first pair of cost at most `k`.
pub fn fmp_at_most(g: &Graph, k: usize) -> Result<bool> {
    fmp_at_most_with(g, k, &SearchOptions::default())
}

pub fn fmp_at_most_with(g: &Graph, k: usize, opts: &SearchOptions) -> Result<bool> {
    check_order(g)?;
    if !has_fpm(g) {
        return Ok(true);
    }
    Ok(search::exists_at_most(g, k, opts.limits(k))?.is_some())
}

/// Cost of the pair `(S, I)` without building `T`.
pub fn pair_cost(g: &Graph, s: &VertexSet, i: &VertexSet) -> usize {
    search::pair_cost(g, s.mask(), i.mask())
}

/// `S` with `i(G - S) > |S|`, found as a zero-cost pair. Not capped by
/// order, but exponential in the worst case.
pub(crate) fn isolation_witness(g: &Graph) -> Result<Option<VertexSet>> {
    check_order(g)?;
    let hit = search::exists_at_most(g, 0, Limits::default())?;
    Ok(hit.map(|p| VertexSet::from_mask(g.order(), p.s).expect("mask within order")))
}

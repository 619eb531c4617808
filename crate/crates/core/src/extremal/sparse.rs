//! Fewest edges for a given `fmp`: exhaustive search, census, constructions.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use super::record::{ExtremalFn, ExtremalRecord, Status, Strategy};
use super::scan::{scan, Checkpoint, ScanPlan};
use super::Budget;
use crate::error::{Error, Result};
use crate::families::{apex_over_factorizable, h_family, s_witness, SCase};
use crate::graph::{graph6_encode, named, pair_count, EnumOptions, Graph};
use crate::matching::has_fpm;
use crate::preclusion::{fmp, fmp_at_most};

/// Largest order accepted by the exhaustive searches here.
pub const SPARSE_SEARCH_CAP: usize = 9;

/// `fmp(g) == k`, deciding with the bounded searches only.
pub fn fmp_equals(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Ok(!has_fpm(g));
    }
    Ok(has_fpm(g) && fmp_at_most(g, k)? && !fmp_at_most(g, k - 1)?)
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n == 0 || k >= n {
        return Err(Error::invalid(format!("need 0 <= k < n, got n = {n}, k = {k}")));
    }
    Ok(())
}

/// Exact `s(n, k)` by sweeping edge counts upward from `ceil(nk/2)`.
/// Graphs with `fmp = k >= 1` have minimum degree at least `k`, so only
/// those are generated. Out of budget, the record keeps the last level
/// fully cleared as a lower bound.
pub fn s_exact(n: usize, k: usize, budget: &Budget) -> Result<ExtremalRecord> {
    check_params(n, k)?;
    if n > SPARSE_SEARCH_CAP {
        return Err(Error::cap("exhaustive s order", SPARSE_SEARCH_CAP, n));
    }
    if k == 0 {
        return Ok(ExtremalRecord::exact(ExtremalFn::S, n, 0, 0, Strategy::Exhaustive)
            .with_witness(&named::empty(n))
            .with_source("edgeless graph"));
    }
    let deadline = budget.deadline();
    let start = (n * k).div_ceil(2);
    for e in start..=pair_count(n) {
        let opts = EnumOptions::new(n).with_cap(SPARSE_SEARCH_CAP).exact_edges(e).min_degree(k);
        let plan = ScanPlan::new(&opts).deadline(deadline).first_break();
        let rep = scan(&opts, &plan, |g, hit: &mut Option<Graph>| match fmp_equals(g, k) {
            Ok(true) => {
                *hit = Some(g.clone());
                ControlFlow::Break(())
            }
            _ => ControlFlow::Continue(()),
        })?;
        if !rep.complete {
            return Ok(ExtremalRecord {
                lower: Some(e),
                upper: None,
                value: None,
                status: Status::Bounds,
                witness: None,
                ..ExtremalRecord::exact(ExtremalFn::S, n, k, e, Strategy::Exhaustive)
            }
            .with_source(format!("budget reached while sweeping {e} edges")));
        }
        if let Some(Some(g)) = rep.first_break() {
            return Ok(ExtremalRecord::exact(ExtremalFn::S, n, k, e, Strategy::Exhaustive)
                .with_witness(g)
                .with_source(format!("all labelled graphs with min degree >= {k} and {start}..={e} edges")));
        }
    }
    Err(Error::invalid(format!("no graph on {n} vertices has fmp {k}")))
}

/// Per-value summary of a full census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub fmp: usize,
    pub graphs: u64,
    pub min_edges: usize,
    /// First labelled graph (in enumeration order) attaining `min_edges`.
    pub first_graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n: usize,
    pub graphs: u64,
    pub rows: Vec<CensusRow>,
    pub complete: bool,
    #[serde(skip)]
    pub checkpoint: Checkpoint,
}

impl Census {
    pub fn min_edges(&self, fmp: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.fmp == fmp).map(|r| r.min_edges)
    }
}

/// `fmp` of every labelled graph on `n` vertices.
pub fn fmp_census(n: usize, budget: &Budget) -> Result<Census> {
    if n == 0 || n > 7 {
        return Err(Error::cap("census order", 7, n));
    }
    let opts = EnumOptions::new(n);
    let plan = ScanPlan::new(&opts).deadline(budget.deadline());
    type Acc = BTreeMap<usize, (u64, usize, Option<Graph>)>;
    let rep = scan(&opts, &plan, |g, acc: &mut Acc| {
        let f = fmp(g).expect("order within range").value;
        let slot = acc.entry(f).or_insert((0, usize::MAX, None));
        slot.0 += 1;
        if g.size() < slot.1 {
            slot.1 = g.size();
            slot.2 = Some(g.clone());
        }
        ControlFlow::Continue(())
    })?;
    let mut merged: Acc = BTreeMap::new();
    for unit in &rep.units {
        for (&f, (count, e, g)) in &unit.acc {
            let slot = merged.entry(f).or_insert((0, usize::MAX, None));
            slot.0 += count;
            if *e < slot.1 {
                slot.1 = *e;
                slot.2 = g.clone();
            }
        }
    }
    let rows = merged
        .into_iter()
        .map(|(fmp, (graphs, min_edges, g))| CensusRow {
            fmp,
            graphs,
            min_edges,
            first_graph6: graph6_encode(&g.expect("slot is filled on first use")),
        })
        .collect();
    Ok(Census {
        n,
        graphs: rep.visited(),
        rows,
        complete: rep.complete,
        checkpoint: rep.checkpoint,
    })
}

/// `s(n, k)` from the explicit constructions, with `fmp` recomputed.
///
/// * `k >= 6`: the case split on `n = l(k+1) + r`. Cases meeting
///   `ceil(nk/2)` are exact. In the apex case, when the apex graph itself
///   has `fmp = k + 1`, deleting one apex edge drops the minimum degree to
///   `k` and gives a witness with one edge fewer.
/// * `k = 1`, odd `n >= 5`: `((n-3)/2) K2 + K3`.
/// * `k = 2`, `n = 9, 13, 17, ..` or `15, 19, ..`: the bowtie families.
pub fn s_construction(n: usize, k: usize) -> Result<ExtremalRecord> {
    check_params(n, k)?;
    let lower = (n * k).div_ceil(2);
    let (g, source, exact) = match k {
        1 => (h_family(n, 2)?, "K2 copies plus a triangle".to_string(), false),
        2 => {
            let which = if n % 4 == 1 { 3 } else { 4 };
            (h_family(n, which)?, format!("bowtie family H{which}"), false)
        }
        k if k >= 6 => {
            let w = s_witness(n, k)?;
            if w.case == SCase::Apex {
                let apex = apex_over_factorizable(n, k)?;
                let f = fmp(&apex)?.value;
                if f == k {
                    (apex, "apex over a factorizable regular graph".into(), false)
                } else {
                    let g = apex.without_edge(0, n - 1)?;
                    (g, format!("apex graph has fmp {f}; one apex edge removed"), false)
                }
            } else {
                let exact = w.graph.size() == lower;
                (w.graph, format!("construction case {}", w.case.name()), exact)
            }
        }
        _ => return Err(Error::invalid(format!("no construction for k = {k}"))),
    };
    let f = fmp(&g)?.value;
    if f != k {
        return Err(Error::invalid(format!("construction for ({n}, {k}) has fmp {f}")));
    }
    let e = g.size();
    let rec = if exact {
        ExtremalRecord::exact(ExtremalFn::S, n, k, e, Strategy::Construction)
    } else {
        ExtremalRecord {
            value: None,
            lower: Some(lower),
            upper: Some(e),
            status: Status::ConstructionOnly,
            ..ExtremalRecord::exact(ExtremalFn::S, n, k, e, Strategy::Construction)
        }
    };
    Ok(rec.with_witness(&g).with_source(source))
}

/// Best available `s(n, k)`: exhaustive up to seven vertices, otherwise
/// the construction.
pub fn s_record(n: usize, k: usize, budget: &Budget) -> Result<ExtremalRecord> {
    if n <= 7 {
        s_exact(n, k, budget)
    } else {
        s_construction(n, k)
    }
}

/// `g(n, k) = s(n, k+1) - 1`, carrying the `s` record's witness and status.
pub fn g_from_s(s: &ExtremalRecord) -> Result<ExtremalRecord> {
    if s.function != ExtremalFn::S {
        return Err(Error::invalid("g is derived from an s record"));
    }
    if s.k == 0 {
        return Err(Error::invalid("g(n, k) needs s(n, k + 1) with k + 1 >= 1"));
    }
    let dec = |x: Option<usize>| x.map(|v| v.saturating_sub(1));
    Ok(ExtremalRecord {
        function: ExtremalFn::G,
        n: s.n,
        k: s.k - 1,
        value: dec(s.value),
        lower: dec(s.lower),
        upper: dec(s.upper),
        witness: s.witness.clone(),
        strategy: s.strategy,
        status: s.status,
        source: format!("s({}, {}) - 1 where s: {}", s.n, s.k, s.source),
    })
}

pub fn g_record(n: usize, k: usize, budget: &Budget) -> Result<ExtremalRecord> {
    g_from_s(&s_record(n, k + 1, budget)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseTwoReport {
    pub n: usize,
    pub max_edges: usize,
    pub graphs_checked: u64,
    /// A graph with at most `max_edges` edges and `fmp = 2`, if any.
    pub counterexample: Option<String>,
    pub complete: bool,
    pub checkpoint: Checkpoint,
}

/// Search every labelled graph on `n` vertices with at most `n + 2` edges
/// for one with `fmp = 2`. Such a graph has minimum degree at least 2,
/// so it has at least `n` edges, and then its degree sum leaves at most 6
/// for any single vertex; both bounds prune the enumeration.
pub fn s2_lowerbound_search(n: usize, budget: &Budget, resume: Option<Checkpoint>) -> Result<SparseTwoReport> {
    if !(3..=SPARSE_SEARCH_CAP).contains(&n) {
        return Err(Error::cap("sparse search order", SPARSE_SEARCH_CAP, n));
    }
    let opts = EnumOptions::new(n)
        .with_cap(SPARSE_SEARCH_CAP)
        .min_degree(2)
        .max_degree(6)
        .max_edges(n + 2);
    let plan = ScanPlan::new(&opts)
        .deadline(budget.deadline())
        .first_break()
        .resume(resume);
    let rep = scan(&opts, &plan, |g, hit: &mut Option<Graph>| {
        if has_fpm(g) && !fmp_at_most(g, 1).expect("non-null graph") {
            *hit = Some(g.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(SparseTwoReport {
        n,
        max_edges: n + 2,
        graphs_checked: rep.visited(),
        counterexample: rep.first_break().cloned().flatten().map(|g| graph6_encode(&g)),
        complete: rep.complete,
        checkpoint: rep.checkpoint,
    })
}

/// Construction upper bound for `s(n, 2)` combined with a sparse search
/// report: exact when the search finished without a counterexample.
pub fn s2_record(n: usize, search: &SparseTwoReport) -> Result<ExtremalRecord> {
    let mut rec = s_construction(n, 2)?;
    if search.n == n && search.complete && search.counterexample.is_none() && rec.upper == Some(n + 3) {
        rec.value = Some(n + 3);
        rec.lower = Some(n + 3);
        rec.status = Status::ProvenExact;
        rec.source = format!("{}; no graph with at most {} edges has fmp 2", rec.source, n + 2);
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_exact_values() {
        let b = Budget::unlimited();
        assert_eq!(s_exact(5, 0, &b).unwrap().value, Some(0));
        assert_eq!(s_exact(5, 1, &b).unwrap().value, Some(4));
        let r = s_exact(4, 2, &b).unwrap();
        assert_eq!(r.value, Some(4));
        r.validate().unwrap();
        assert!(s_exact(4, 4, &b).is_err());
        assert!(s_exact(10, 2, &b).is_err());
    }

    #[test]
    fn census_agrees_with_exact_search() {
        let b = Budget::unlimited();
        let c = fmp_census(5, &b).unwrap();
        assert!(c.complete);
        assert_eq!(c.graphs, 1024);
        assert_eq!(c.rows.iter().map(|r| r.graphs).sum::<u64>(), 1024);
        for row in &c.rows {
            let r = s_exact(5, row.fmp, &b).unwrap();
            assert_eq!(r.value, Some(row.min_edges));
        }
    }

    #[test]
    fn constructions_validate() {
        for (n, k) in [(7, 1), (9, 2), (15, 2), (14, 6), (13, 6)] {
            s_construction(n, k).unwrap().validate().unwrap();
        }
        let apex = s_construction(13, 6).unwrap();
        assert_eq!(apex.status, Status::ConstructionOnly);
        assert_eq!(apex.lower, Some(39));
    }

    #[test]
    fn g_is_shifted_s() {
        let s = s_construction(14, 6).unwrap();
        let g = g_from_s(&s).unwrap();
        assert_eq!((g.k, g.value), (5, Some(41)));
        g.validate().unwrap();
    }

    #[test]
    fn sparse_search_agrees_with_census() {
        let b = Budget::unlimited();
        for n in [5, 6] {
            let r = s2_lowerbound_search(n, &b, None).unwrap();
            assert!(r.complete);
            let smallest = fmp_census(n, &b).unwrap().min_edges(2);
            assert_eq!(r.counterexample.is_some(), smallest.is_some_and(|e| e <= n + 2));
        }
    }
}

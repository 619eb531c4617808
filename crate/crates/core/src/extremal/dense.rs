//! Dense regimes, searched through complements: the edge threshold that
//! forces `fmp >= k`, and graphs of minimum degree at least `n - k`.

use std::ops::ControlFlow;

use serde::Serialize;

use super::record::{ExtremalFn, ExtremalRecord, Status, Strategy};
use super::scan::{scan, ScanPlan};
use super::Budget;
use crate::error::{Error, Result};
use crate::families::f_lower_witness;
use crate::graph::{graph6_encode, named, pair_count, EnumOptions, Graph, InvariantKey, HARD_ENUM_CAP};
use crate::preclusion::{fmp, fmp_at_most};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FReport {
    pub record: ExtremalRecord,
    pub complements_checked: u64,
    /// A graph at or above the threshold with `fmp < k`.
    pub violation: Option<String>,
    pub witness_fmp_below_k: bool,
    pub witness_connected: bool,
    pub complete: bool,
}

impl FReport {
    pub fn passed(&self) -> bool {
        self.complete && self.violation.is_none() && self.witness_fmp_below_k
    }
}

/// Check that `C(n-1, 2) + k` edges force `fmp >= k` and that one edge
/// fewer does not. The upward direction runs over every labelled
/// complement with at most `n - 1 - k` edges; such graphs are connected.
pub fn f_verify(n: usize, k: usize, budget: &Budget) -> Result<FReport> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")));
    }
    if n > HARD_ENUM_CAP {
        return Err(Error::cap("complement enumeration order", HARD_ENUM_CAP, n));
    }
    let value = pair_count(n - 1) + k;
    let opts = EnumOptions::new(n).with_cap(HARD_ENUM_CAP).max_edges(n - 1 - k);
    let plan = ScanPlan::new(&opts).deadline(budget.deadline()).first_break();
    let rep = scan(&opts, &plan, |h, bad: &mut Option<Graph>| {
        let g = h.complement();
        if !g.is_connected() || fmp_at_most(&g, k - 1).expect("non-null graph") {
            *bad = Some(g);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    let violation = rep.first_break().cloned().flatten().map(|g| graph6_encode(&g));
    let witness = f_lower_witness(n, k)?;
    let witness_fmp_below_k = witness.size() + 1 == value && fmp_at_most(&witness, k - 1)?;
    let ok = rep.complete && violation.is_none() && witness_fmp_below_k;
    let mut record = ExtremalRecord::exact(ExtremalFn::F, n, k, value, Strategy::Complement)
        .with_witness(&witness)
        .with_source(format!("{} complements with at most {} edges", rep.visited(), n - 1 - k));
    if !ok {
        record.value = None;
        record.upper = None;
        record.status = Status::Bounds;
        if !rep.complete || violation.is_some() {
            record.lower = None;
        }
    }
    Ok(FReport {
        record,
        complements_checked: rep.visited(),
        violation,
        witness_fmp_below_k,
        witness_connected: witness.is_connected(),
        complete: rep.complete,
    })
}

/// One graph of a threshold check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdEntry {
    pub graph6: String,
    pub min_degree: usize,
    pub fmp: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Enumeration {
    /// One graph per isomorphism class, built from path and cycle pieces.
    Structural,
    /// Every labelled complement.
    Labelled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub k: usize,
    pub enumeration: Enumeration,
    pub graphs_checked: u64,
    /// `fmp = min degree` on every graph checked.
    pub all_equal: bool,
    /// `fmp <= min degree` on every graph checked.
    pub bounded_by_degree: bool,
    pub complete: bool,
    pub entries: Vec<ThresholdEntry>,
}

impl ThresholdReport {
    pub fn passed(&self) -> bool {
        self.complete && self.all_equal && self.bounded_by_degree
    }
}

/// Graphs with maximum degree at most 2 on `n` vertices, one per
/// isomorphism class: multisets of paths `P1, P2, ..` and cycles `C3, ..`.
pub fn max_degree_two_classes(n: usize, max_degree: usize) -> Vec<Graph> {
    #[derive(Clone, Copy)]
    enum Piece {
        Path(usize),
        Cycle(usize),
    }
    let mut kinds = Vec::new();
    let longest_path = match max_degree {
        0 => 1,
        1 => 2,
        _ => n,
    };
    kinds.extend((1..=longest_path.min(n)).map(Piece::Path));
    if max_degree >= 2 {
        kinds.extend((3..=n).map(Piece::Cycle));
    }
    let size = |p: Piece| match p {
        Piece::Path(a) | Piece::Cycle(a) => a,
    };
    fn go(kinds: &[Piece], size: &dyn Fn(Piece) -> usize, from: usize, left: usize, cur: &mut Vec<Piece>, out: &mut Vec<Vec<Piece>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for idx in from..kinds.len() {
            if size(kinds[idx]) <= left {
                cur.push(kinds[idx]);
                go(kinds, size, idx, left - size(kinds[idx]), cur, out);
                cur.pop();
            }
        }
    }
    let mut multisets = Vec::new();
    go(&kinds, &size, 0, n, &mut Vec::new(), &mut multisets);
    multisets
        .into_iter()
        .map(|pieces| {
            let parts: Vec<Graph> = pieces
                .into_iter()
                .map(|p| match p {
                    Piece::Path(a) => named::path(a),
                    Piece::Cycle(a) => named::cycle(a),
                })
                .collect();
            Graph::union_all(parts.iter()).expect("order within cap")
        })
        .collect()
}

fn entry(g: &Graph) -> Result<ThresholdEntry> {
    Ok(ThresholdEntry {
        graph6: graph6_encode(g),
        min_degree: g.min_degree(),
        fmp: fmp(g)?.value,
    })
}

/// Check `fmp(G) = min degree` for every `G` on `n` vertices with
/// minimum degree at least `n - k`. Complements have maximum degree at
/// most `k - 1`; for `k <= 3` they are generated per isomorphism class,
/// otherwise every labelled complement is visited.
pub fn threshold_verify(n: usize, k: usize, budget: &Budget) -> Result<ThresholdReport> {
    let mode = if k <= 3 { Enumeration::Structural } else { Enumeration::Labelled };
    threshold_verify_with(n, k, mode, budget)
}

pub fn threshold_verify_with(n: usize, k: usize, mode: Enumeration, budget: &Budget) -> Result<ThresholdReport> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k <= n - 1, got n = {n}, k = {k}")));
    }
    let (entries, complete) = match mode {
        Enumeration::Structural => {
            if k > 3 {
                return Err(Error::invalid("structural enumeration covers maximum degree at most 2"));
            }
            if n > 64 {
                return Err(Error::cap("graph order", 64, n));
            }
            let deadline = budget.deadline();
            let mut out = Vec::new();
            let mut complete = true;
            for h in max_degree_two_classes(n, k - 1) {
                if deadline.is_some_and(|d| std::time::Instant::now() >= d) {
                    complete = false;
                    break;
                }
                out.push(entry(&h.complement())?);
            }
            (out, complete)
        }
        Enumeration::Labelled => {
            if n > HARD_ENUM_CAP {
                return Err(Error::cap("complement enumeration order", HARD_ENUM_CAP, n));
            }
            let opts = EnumOptions::new(n).with_cap(HARD_ENUM_CAP).max_degree(k - 1);
            let plan = ScanPlan::new(&opts).deadline(budget.deadline());
            let rep = scan(&opts, &plan, |h, acc: &mut Vec<ThresholdEntry>| {
                acc.push(entry(&h.complement()).expect("non-null graph"));
                ControlFlow::Continue(())
            })?;
            let complete = rep.complete;
            (rep.units.into_iter().flat_map(|u| u.acc).collect(), complete)
        }
    };
    Ok(ThresholdReport {
        n,
        k,
        enumeration: mode,
        graphs_checked: entries.len() as u64,
        all_equal: entries.iter().all(|e| e.fmp == e.min_degree),
        bounded_by_degree: entries.iter().all(|e| e.fmp <= e.min_degree),
        complete,
        entries,
    })
}

/// Isomorphism-invariant keys of a threshold report, for comparing the two
/// enumerations.
pub fn entry_keys(report: &ThresholdReport) -> Result<Vec<InvariantKey>> {
    let mut keys = report
        .entries
        .iter()
        .map(|e| Ok(crate::graph::graph6_decode(&e.graph6)?.invariant_key()))
        .collect::<Result<Vec<_>>>()?;
    keys.sort();
    keys.dedup();
    Ok(keys)
}

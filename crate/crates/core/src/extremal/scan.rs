//! Parallel sweep over an enumeration split into prefix units.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, EnumOptions, Graph};

/// Units of a sweep that have been fully visited.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub prefix_len: usize,
    pub done: BTreeSet<u64>,
}

#[derive(Clone, Debug)]
pub struct ScanPlan {
    pub prefix_len: usize,
    pub deadline: Option<Instant>,
    /// Skip units after the first one in which the visitor breaks.
    pub first_break: bool,
    pub resume: Option<Checkpoint>,
}

impl ScanPlan {
    pub fn new(opts: &EnumOptions) -> Self {
        ScanPlan {
            prefix_len: pair_count(opts.order()).min(12),
            deadline: None,
            first_break: false,
            resume: None,
        }
    }

    pub fn deadline(mut self, d: Option<Instant>) -> Self {
        self.deadline = d;
        self
    }

    pub fn first_break(mut self) -> Self {
        self.first_break = true;
        self
    }

    pub fn resume(mut self, c: Option<Checkpoint>) -> Self {
        self.resume = c;
        self
    }
}

#[derive(Clone, Debug)]
pub struct UnitResult<A> {
    pub unit: u64,
    pub acc: A,
    pub visited: u64,
    pub broke: bool,
}

#[derive(Clone, Debug)]
pub struct ScanReport<A> {
    /// Units visited in this run, in unit order.
    pub units: Vec<UnitResult<A>>,
    pub checkpoint: Checkpoint,
    pub total_units: u64,
    /// Every unit that could affect the answer was finished.
    pub complete: bool,
}

impl<A> ScanReport<A> {
    pub fn visited(&self) -> u64 {
        self.units.iter().map(|u| u.visited).sum()
    }

    /// Accumulator of the first unit whose visitor broke.
    pub fn first_break(&self) -> Option<&A> {
        self.units.iter().find(|u| u.broke).map(|u| &u.acc)
    }
}

const CLOCK_EVERY: u64 = 1 << 10;

/// Visit every graph of `opts`, one accumulator per unit.
pub fn scan<A, F>(opts: &EnumOptions, plan: &ScanPlan, visit: F) -> Result<ScanReport<A>>
where
    A: Default + Send,
    F: Fn(&Graph, &mut A) -> ControlFlow<()> + Sync,
{
    let parts = opts.partitions(plan.prefix_len)?;
    let prefix_len = parts[0].prefix().map_or(0, |p| p.0);
    if let Some(r) = &plan.resume {
        if r.prefix_len != prefix_len {
            return Err(Error::invalid(format!(
                "checkpoint uses prefix length {}, this sweep uses {prefix_len}",
                r.prefix_len
            )));
        }
    }
    let total_units = parts.len() as u64;
    let already: BTreeSet<u64> = plan.resume.as_ref().map(|c| c.done.clone()).unwrap_or_default();
    let first_hit = AtomicU64::new(u64::MAX);

    let results: Vec<Result<Option<UnitResult<A>>>> = parts
        .par_iter()
        .enumerate()
        .map(|(idx, part)| {
            let unit = idx as u64;
            if already.contains(&unit) || (plan.first_break && unit > first_hit.load(Ordering::Relaxed)) {
                return Ok(None);
            }
            let mut acc = A::default();
            let mut visited = 0u64;
            let mut broke = false;
            for g in part.iter()? {
                visited += 1;
                if visited % CLOCK_EVERY == 0 {
                    if plan.deadline.is_some_and(|d| Instant::now() >= d) {
                        return Err(Error::BudgetExhausted(format!("unit {unit} unfinished")));
                    }
                    if plan.first_break && unit > first_hit.load(Ordering::Relaxed) {
                        return Ok(None);
                    }
                }
                if visit(&g, &mut acc).is_break() {
                    broke = true;
                    if plan.first_break {
                        first_hit.fetch_min(unit, Ordering::Relaxed);
                        break;
                    }
                }
            }
            Ok(Some(UnitResult {
                unit,
                acc,
                visited,
                broke,
            }))
        })
        .collect();

    let mut units = Vec::new();
    let mut done = already;
    let mut timed_out = Vec::new();
    for (idx, r) in results.into_iter().enumerate() {
        match r {
            Ok(Some(u)) => {
                done.insert(u.unit);
                units.push(u);
            }
            Ok(None) => {}
            Err(Error::BudgetExhausted(_)) => timed_out.push(idx as u64),
            Err(e) => return Err(e),
        }
    }
    let cutoff = first_hit.load(Ordering::Relaxed);
    let complete = timed_out.iter().all(|&u| plan.first_break && u > cutoff);
    Ok(ScanReport {
        units,
        checkpoint: Checkpoint { prefix_len, done },
        total_units,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_plain_iteration() {
        let opts = EnumOptions::new(6).min_degree(2);
        let plan = ScanPlan::new(&opts);
        let rep = scan(&opts, &plan, |_, n: &mut u64| {
            *n += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(rep.complete);
        assert_eq!(rep.visited(), opts.count().unwrap());
        assert_eq!(rep.checkpoint.done.len() as u64, rep.total_units);
    }

    #[test]
    fn first_break_is_the_first_in_order() {
        let opts = EnumOptions::new(6);
        let plan = ScanPlan::new(&opts).first_break();
        let rep = scan(&opts, &plan, |g, hit: &mut Option<Graph>| {
            if g.size() == 7 && g.is_connected() {
                *hit = Some(g.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        let want = opts.iter().unwrap().find(|g| g.size() == 7 && g.is_connected());
        assert_eq!(rep.first_break().cloned().flatten(), want);
    }

    #[test]
    fn resume_skips_done_units() {
        let opts = EnumOptions::new(5);
        let plan = ScanPlan::new(&opts);
        let count = |_: &Graph, n: &mut u64| {
            *n += 1;
            ControlFlow::Continue(())
        };
        let full = scan(&opts, &plan, count).unwrap();
        let mut half = full.checkpoint.clone();
        half.done.retain(|&u| u % 2 == 0);
        let rest = scan(&opts, &plan.clone().resume(Some(half)), count).unwrap();
        let odd: u64 = full.units.iter().filter(|u| u.unit % 2 == 1).map(|u| u.visited).sum();
        assert_eq!(rest.visited(), odd);
        assert_eq!(rest.checkpoint, full.checkpoint);
    }
}

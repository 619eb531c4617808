//! Extremal edge counts for `fmp`, by exhaustive, complement-space and
//! constructive search.

mod dense;
mod record;
mod scan;
mod sparse;

pub use dense::{
    entry_keys, f_verify, max_degree_two_classes, threshold_verify, threshold_verify_with, Enumeration, FReport,
    ThresholdEntry, ThresholdReport,
};
pub use record::{read_csv, read_json, write_csv, ExtremalFn, ExtremalRecord, Status, Strategy};
pub use scan::{scan, Checkpoint, ScanPlan, ScanReport, UnitResult};
pub use sparse::{
    fmp_census, fmp_equals, g_from_s, g_record, s2_lowerbound_search, s2_record, s_construction, s_exact, s_record,
    Census, CensusRow, SparseTwoReport, SPARSE_SEARCH_CAP,
};

use std::time::{Duration, Instant};

/// Wall-clock allowance for a search, fixed when the budget is created.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn seconds(s: f64) -> Self {
        Budget::from_duration(Duration::from_secs_f64(s.max(0.0)))
    }

    pub fn from_duration(d: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + d),
        }
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub fn remaining(&self) -> Option<Duration> {
        self.deadline.map(|d| d.saturating_duration_since(Instant::now()))
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

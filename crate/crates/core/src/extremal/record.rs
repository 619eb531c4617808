use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, Graph};
use crate::preclusion::fmp;

/// Which extremal function a record describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalFn {
    /// Fewest edges of a graph with `fmp = k`.
    S,
    /// Edge count forcing `fmp >= k`.
    F,
    /// Largest edge count guaranteeing `fmp <= k`.
    G,
}

impl fmt::Display for ExtremalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalFn::S => "s",
            ExtremalFn::F => "f",
            ExtremalFn::G => "g",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Complement,
    Construction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// `value` is established by this computation.
    ProvenExact,
    /// Only `upper` is established, by a verified construction.
    ConstructionOnly,
    /// A search ran out of budget; `lower` and `upper` are what it reached.
    Bounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub function: ExtremalFn,
    pub n: usize,
    pub k: usize,
    pub value: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    #[serde(rename = "witness_graph6")]
    pub witness: Option<String>,
    pub strategy: Strategy,
    pub status: Status,
    /// How the numbers were obtained.
    #[serde(default)]
    pub source: String,
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    k: usize,
    value: Option<usize>,
    lower: Option<usize>,
    upper: Option<usize>,
    witness_graph6: Option<String>,
    strategy: Strategy,
    status: Status,
}

impl ExtremalRecord {
    pub fn exact(function: ExtremalFn, n: usize, k: usize, value: usize, strategy: Strategy) -> Self {
        ExtremalRecord {
            function,
            n,
            k,
            value: Some(value),
            lower: Some(value),
            upper: Some(value),
            witness: None,
            strategy,
            status: Status::ProvenExact,
            source: String::new(),
        }
    }

    pub fn with_witness(mut self, g: &Graph) -> Self {
        self.witness = Some(graph6_encode(g));
        self
    }

    pub fn with_source(mut self, s: impl Into<String>) -> Self {
        self.source = s.into();
        self
    }

    pub fn witness_graph(&self) -> Result<Option<Graph>> {
        self.witness.as_deref().map(graph6_decode).transpose()
    }

    /// Best value known: the exact value, else the upper bound.
    pub fn best(&self) -> Option<usize> {
        self.value.or(self.upper)
    }

    /// Internal consistency and witness recomputation.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::invalid(format!("{} record ({}, {}): {msg}", self.function, self.n, self.k)));
        if let (Some(lo), Some(hi)) = (self.lower, self.upper) {
            if lo > hi {
                return bad(format!("lower {lo} exceeds upper {hi}"));
            }
        }
        if let Some(v) = self.value {
            if self.lower.is_some_and(|lo| lo != v) || self.upper.is_some_and(|hi| hi != v) {
                return bad(format!("bounds disagree with value {v}"));
            }
        }
        if self.status == Status::ProvenExact && self.value.is_none() {
            return bad("proven-exact without a value".into());
        }
        let Some(g) = self.witness_graph()? else {
            return Ok(());
        };
        if g.order() != self.n {
            return bad(format!("witness has order {}", g.order()));
        }
        let Some(best) = self.best() else {
            return bad("witness without a value or upper bound".into());
        };
        let f = fmp(&g)?.value;
        let (want_edges, fmp_ok) = match self.function {
            ExtremalFn::S => (best, f == self.k),
            ExtremalFn::F => (best.wrapping_sub(1), f < self.k),
            ExtremalFn::G => (best + 1, f == self.k + 1),
        };
        if g.size() != want_edges {
            return bad(format!("witness has {} edges, expected {want_edges}", g.size()));
        }
        if !fmp_ok {
            return bad(format!("witness has fmp {f}"));
        }
        Ok(())
    }
}

/// Write records as CSV with columns
/// `n,k,value,lower,upper,witness_graph6,strategy,status`.
pub fn write_csv<W: Write>(records: &[ExtremalRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow {
            n: r.n,
            k: r.k,
            value: r.value,
            lower: r.lower,
            upper: r.upper,
            witness_graph6: r.witness.clone(),
            strategy: r.strategy,
            status: r.status,
        })
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Read and validate a CSV table of one extremal function.
pub fn read_csv<R: Read>(input: R, function: ExtremalFn) -> Result<Vec<ExtremalRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for row in rdr.deserialize::<CsvRow>() {
        let row = row.map_err(|e| {
            let offset = e.position().map_or(0, |p| p.byte() as usize);
            Error::parse(offset, e.to_string())
        })?;
        let r = ExtremalRecord {
            function,
            n: row.n,
            k: row.k,
            value: row.value,
            lower: row.lower,
            upper: row.upper,
            witness: row.witness_graph6,
            strategy: row.strategy,
            status: row.status,
            source: String::new(),
        };
        r.validate()?;
        out.push(r);
    }
    Ok(out)
}

/// Parse and validate a JSON array of records.
pub fn read_json(text: &str) -> Result<Vec<ExtremalRecord>> {
    let recs: Vec<ExtremalRecord> = serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
    for r in &recs {
        r.validate()?;
    }
    Ok(recs)
}

//! Exhaustive enumeration of labelled graphs.
//!
//! Vertex pairs are taken in row-major order `(0,1), (0,2), .., (0,n-1),
//! (1,2), ..`; the first pair is the most significant bit of the edge mask
//! and graphs are produced in increasing mask order. The degree and edge
//! bounds in [`EnumOptions`] are checked on partial masks, so a branch is
//! abandoned as soon as no completion can satisfy them. The leaf predicate
//! only ever sees complete graphs.

use std::fmt;
use std::sync::Arc;

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// Order accepted without an explicit `with_cap`.
pub const DEFAULT_ENUM_CAP: usize = 7;
/// Upper limit for `with_cap`.
pub const HARD_ENUM_CAP: usize = 16;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

type LeafFilter = Arc<dyn Fn(&Graph) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct EnumOptions {
    n: usize,
    cap: usize,
    min_edges: usize,
    max_edges: Option<usize>,
    min_degree: usize,
    max_degree: Option<usize>,
    prefix: Option<(usize, u64)>,
    filter: Option<LeafFilter>,
}

impl fmt::Debug for EnumOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EnumOptions")
            .field("n", &self.n)
            .field("cap", &self.cap)
            .field("min_edges", &self.min_edges)
            .field("max_edges", &self.max_edges)
            .field("min_degree", &self.min_degree)
            .field("max_degree", &self.max_degree)
            .field("prefix", &self.prefix)
            .field("filter", &self.filter.as_ref().map(|_| "<fn>"))
            .finish()
    }
}

impl EnumOptions {
    pub fn new(n: usize) -> Self {
        EnumOptions {
            n,
            cap: DEFAULT_ENUM_CAP,
            min_edges: 0,
            max_edges: None,
            min_degree: 0,
            max_degree: None,
            prefix: None,
            filter: None,
        }
    }

    /// Raise the order cap (at most [`HARD_ENUM_CAP`]). Callers doing this
    /// should also bound edges or degrees.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn min_edges(mut self, m: usize) -> Self {
        self.min_edges = m;
        self
    }

    pub fn max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn exact_edges(self, m: usize) -> Self {
        self.min_edges(m).max_edges(m)
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    /// Predicate applied to each complete graph.
    pub fn filter(mut self, f: impl Fn(&Graph) -> bool + Send + Sync + 'static) -> Self {
        self.filter = Some(Arc::new(f));
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn prefix(&self) -> Option<(usize, u64)> {
        self.prefix
    }

    /// Split into `2^len` work units by fixing the first `len` pairs.
    /// Concatenating the units in the returned order reproduces the
    /// unsplit sequence.
    pub fn partitions(&self, len: usize) -> Result<Vec<EnumOptions>> {
        let len = len.min(pair_count(self.n));
        if len > 24 {
            return Err(Error::cap("partition prefix length", 24, len));
        }
        if self.prefix.is_some() {
            return Err(Error::invalid("options are already a partition"));
        }
        Ok((0..1u64 << len)
            .map(|value| {
                let mut o = self.clone();
                o.prefix = Some((len, value));
                o
            })
            .collect())
    }

    pub fn iter(&self) -> Result<GraphIter> {
        GraphIter::new(self.clone())
    }

    pub fn count(&self) -> Result<u64> {
        Ok(self.iter()?.count() as u64)
    }
}

/// Depth-first generator behind [`EnumOptions::iter`].
pub struct GraphIter {
    opts: EnumOptions,
    pairs: Vec<(usize, usize)>,
    // 0 = untried, 1 = pair absent, 2 = pair present
    state: Vec<u8>,
    depth: usize,
    start: usize,
    g: Graph,
    // undecided pairs incident to each vertex
    open: Vec<usize>,
    finished: bool,
}

impl GraphIter {
    fn new(opts: EnumOptions) -> Result<Self> {
        let n = opts.n;
        if opts.cap > HARD_ENUM_CAP {
            return Err(Error::cap("enumeration cap", HARD_ENUM_CAP, opts.cap));
        }
        if n > opts.cap || n > MAX_ORDER {
            return Err(Error::cap("enumeration order", opts.cap, n));
        }
        let mut pairs = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        let m = pairs.len();
        let mut it = GraphIter {
            g: Graph::new(n)?,
            open: vec![n.saturating_sub(1); n],
            state: vec![0; m + 1],
            depth: 0,
            start: 0,
            pairs,
            opts,
            finished: false,
        };
        if let Some((len, value)) = it.opts.prefix {
            for d in 0..len {
                let present = value >> (len - 1 - d) & 1 == 1;
                let (u, v) = it.pairs[d];
                it.open[u] -= 1;
                it.open[v] -= 1;
                if present {
                    it.g.toggle_edge_unchecked(u, v);
                }
                if !it.feasible_after(d, u, v) {
                    it.finished = true;
                }
            }
            it.depth = len;
            it.start = len;
        }
        if !it.finished && !it.globally_feasible() {
            it.finished = true;
        }
        Ok(it)
    }

    fn globally_feasible(&self) -> bool {
        let rest = self.pairs.len() - self.depth;
        if self.g.size() + rest < self.opts.min_edges {
            return false;
        }
        if let Some(max) = self.opts.max_edges {
            if self.g.size() > max {
                return false;
            }
        }
        (0..self.opts.n).all(|v| {
            let d = self.g.degree(v);
            d + self.open[v] >= self.opts.min_degree && self.opts.max_degree.is_none_or(|x| d <= x)
        })
    }

    /// Bounds still reachable after deciding pair `d` = `(u, v)`.
    #[inline]
    fn feasible_after(&self, d: usize, u: usize, v: usize) -> bool {
        let o = &self.opts;
        let edges = self.g.size();
        if edges + (self.pairs.len() - d - 1) < o.min_edges {
            return false;
        }
        if o.max_edges.is_some_and(|max| edges > max) {
            return false;
        }
        let (du, dv) = (self.g.degree(u), self.g.degree(v));
        if du + self.open[u] < o.min_degree || dv + self.open[v] < o.min_degree {
            return false;
        }
        if let Some(max) = o.max_degree {
            if du > max || dv > max {
                return false;
            }
        }
        true
    }
}

impl Iterator for GraphIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let m = self.pairs.len();
        loop {
            if self.finished {
                return None;
            }
            if self.depth == m {
                let out = self.g.clone();
                if self.depth == self.start {
                    self.finished = true;
                } else {
                    self.depth -= 1;
                }
                if self.opts.filter.as_ref().is_none_or(|f| f(&out)) {
                    return Some(out);
                }
                continue;
            }
            let d = self.depth;
            let (u, v) = self.pairs[d];
            match self.state[d] {
                0 => {
                    self.state[d] = 1;
                    self.open[u] -= 1;
                    self.open[v] -= 1;
                    if self.feasible_after(d, u, v) {
                        self.depth += 1;
                        self.state[self.depth] = 0;
                    }
                }
                1 => {
                    self.state[d] = 2;
                    self.g.toggle_edge_unchecked(u, v);
                    if self.feasible_after(d, u, v) {
                        self.depth += 1;
                        self.state[self.depth] = 0;
                    }
                }
                _ => {
                    self.g.toggle_edge_unchecked(u, v);
                    self.open[u] += 1;
                    self.open[v] += 1;
                    self.state[d] = 0;
                    if d == self.start {
                        self.finished = true;
                    } else {
                        self.depth -= 1;
                    }
                }
            }
        }
    }
}

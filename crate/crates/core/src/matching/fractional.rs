//! Fractional matchings.
//!
//! The fractional matching polytope has half-integral vertices, so the
//! fractional matching number is half the size of a maximum matching in
//! the bipartite double cover, and an optimum can always be written with
//! edge values in `{0, 1/2, 1}`. A perfect matching of the double cover is
//! a permutation `sigma` with `sigma(v)` adjacent to `v`; its cycles give
//! weight-1 edges (2-cycles and alternate edges of even cycles) and
//! half-weight odd cycles.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{first_subset, Condition};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};

/// Largest order accepted by the `2^n` subset oracles.
pub const SUBSET_ORACLE_CAP: usize = 20;

/// Non-negative multiple of one half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(u64);

impl HalfInt {
    pub fn from_halves(halves: u64) -> Self {
        HalfInt(halves)
    }

    pub fn from_int(v: u64) -> Self {
        HalfInt(2 * v)
    }

    pub fn halves(self) -> u64 {
        self.0
    }

    /// `(numerator, denominator)` in lowest terms, denominator 1 or 2.
    pub fn as_fraction(self) -> (u64, u64) {
        if self.0 % 2 == 0 {
            (self.0 / 2, 1)
        } else {
            (self.0, 2)
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_fraction() {
            (p, 1) => write!(f, "{p}"),
            (p, q) => write!(f, "{p}/{q}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Weight {
    Half,
    One,
}

impl Weight {
    fn halves(self) -> u64 {
        match self {
            Weight::Half => 1,
            Weight::One => 2,
        }
    }
}

/// Edge weighting with values in `{0, 1/2, 1}`; zero edges are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralMatching {
    n: usize,
    entries: Vec<(usize, usize, Weight)>,
}

impl HalfIntegralMatching {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (usize, usize, Weight)>) -> Self {
        let mut entries: Vec<_> = entries
            .into_iter()
            .map(|(u, v, w)| (u.min(v), u.max(v), w))
            .collect();
        entries.sort_unstable();
        HalfIntegralMatching { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(usize, usize, Weight)] {
        &self.entries
    }

    pub fn weight(&self) -> HalfInt {
        HalfInt(self.entries.iter().map(|e| e.2.halves()).sum())
    }

    /// Load of every vertex, in halves.
    pub fn loads(&self) -> Vec<u64> {
        let mut load = vec![0u64; self.n];
        for &(u, v, w) in &self.entries {
            load[u] += w.halves();
            load[v] += w.halves();
        }
        load
    }

    /// Checks the matching is a fractional matching of `g` whose support
    /// splits into weight-1 edges and vertex-disjoint half-weight odd cycles.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n != g.order() {
            return Err(Error::invalid("order mismatch"));
        }
        let mut seen = std::collections::HashSet::new();
        let mut half_adj = vec![0u64; self.n];
        for &(u, v, w) in &self.entries {
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::invalid(format!("({u}, {v}) listed twice")));
            }
            if w == Weight::Half {
                half_adj[u] |= 1 << v;
                half_adj[v] |= 1 << u;
            }
        }
        let load = self.loads();
        if let Some(v) = load.iter().position(|&l| l > 2) {
            return Err(Error::invalid(format!("vertex {v} carries load above 1")));
        }
        if 2 * self.weight().halves() > 2 * self.n as u64 {
            return Err(Error::invalid("total weight above n/2"));
        }
        let half_vertices: u64 = (0..self.n).filter(|&v| half_adj[v] != 0).fold(0, |m, v| m | 1 << v);
        for v in bits(half_vertices) {
            if half_adj[v].count_ones() != 2 {
                return Err(Error::invalid(format!("half-weight support is not a cycle at vertex {v}")));
            }
        }
        let support = Graph::from_rows(half_adj).expect("symmetric by construction");
        for comp in support.components_within(half_vertices) {
            if comp.count_ones() % 2 == 0 {
                return Err(Error::invalid("half-weight cycle of even length"));
            }
        }
        Ok(())
    }

    pub fn is_perfect(&self) -> bool {
        self.loads().iter().all(|&l| l == 2)
    }

    /// Blocks of the equivalent vertex partition: one `K2` per weight-1
    /// edge and one odd block per half-weight cycle.
    pub fn to_partition(&self) -> Vec<PartitionBlock> {
        let mut blocks = Vec::new();
        let mut half_adj = vec![0u64; self.n];
        for &(u, v, w) in &self.entries {
            match w {
                Weight::One => blocks.push(PartitionBlock {
                    vertices: vec![u, v],
                    cycle: None,
                }),
                Weight::Half => {
                    half_adj[u] |= 1 << v;
                    half_adj[v] |= 1 << u;
                }
            }
        }
        let mut left: u64 = (0..self.n).filter(|&v| half_adj[v] != 0).fold(0, |m, v| m | 1 << v);
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut cycle = vec![start];
            let mut prev = start;
            let mut cur = half_adj[start].trailing_zeros() as usize;
            while cur != start {
                cycle.push(cur);
                let next = (half_adj[cur] & !(1 << prev)).trailing_zeros() as usize;
                prev = cur;
                cur = next;
            }
            for &v in &cycle {
                left &= !(1 << v);
            }
            let mut vertices = cycle.clone();
            vertices.sort_unstable();
            blocks.push(PartitionBlock {
                vertices,
                cycle: Some(cycle),
            });
        }
        blocks.sort();
        blocks
    }
}

/// One block of a fractional-perfect-matching partition: an edge, or an
/// odd vertex set with a Hamiltonian cycle of the induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionBlock {
    pub vertices: Vec<usize>,
    pub cycle: Option<Vec<usize>>,
}

impl PartitionBlock {
    fn validate(&self, g: &Graph) -> Result<()> {
        let k = self.vertices.len();
        match (&self.cycle, k) {
            (None, 2) => {
                if g.has_edge(self.vertices[0], self.vertices[1]) {
                    Ok(())
                } else {
                    Err(Error::invalid(format!("block {:?} is not an edge", self.vertices)))
                }
            }
            (Some(cycle), k) if k >= 3 && k % 2 == 1 => {
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                if sorted != self.vertices {
                    return Err(Error::invalid("cycle does not span its block"));
                }
                for i in 0..k {
                    if !g.has_edge(cycle[i], cycle[(i + 1) % k]) {
                        return Err(Error::invalid(format!(
                            "cycle step ({}, {}) is not an edge",
                            cycle[i],
                            cycle[(i + 1) % k]
                        )));
                    }
                }
                Ok(())
            }
            _ => Err(Error::invalid(format!(
                "block {:?} is neither K2 nor an odd Hamiltonian block",
                self.vertices
            ))),
        }
    }
}

/// Evidence that a graph has a fractional perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpmCertificate {
    Matching(HalfIntegralMatching),
    Partition(Vec<PartitionBlock>),
}

impl FpmCertificate {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            FpmCertificate::Matching(f) => {
                f.validate(g)?;
                if f.is_perfect() {
                    Ok(())
                } else {
                    Err(Error::invalid("some vertex load is below 1"))
                }
            }
            FpmCertificate::Partition(blocks) => {
                let mut covered = 0u64;
                for b in blocks {
                    b.validate(g)?;
                    for &v in &b.vertices {
                        if v >= g.order() || covered >> v & 1 == 1 {
                            return Err(Error::invalid(format!("vertex {v} repeated or out of range")));
                        }
                        covered |= 1 << v;
                    }
                }
                if covered != g.vertex_mask() {
                    return Err(Error::invalid("blocks do not cover every vertex"));
                }
                Ok(())
            }
        }
    }
}

/// A set `S` with `i(G - S) > |S|`, which rules out a fractional perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoFpmWitness {
    pub s: VertexSet,
}

impl NoFpmWitness {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let i = g.isolated_count(&self.s)?;
        if i > self.s.len() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "i(G - S) = {i} does not exceed |S| = {}",
                self.s.len()
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FpmDecision {
    Perfect(HalfIntegralMatching),
    /// No fractional perfect matching. The witness is omitted above
    /// [`SUBSET_ORACLE_CAP`] vertices.
    Deficient(Option<NoFpmWitness>),
}

impl FpmDecision {
    pub fn has_fpm(&self) -> bool {
        matches!(self, FpmDecision::Perfect(_))
    }
}

/// Double cover of `g`: vertex `v` and its copy `n + v`, with `u ~ n + v`
/// and `v ~ n + u` for every edge `uv`.
pub fn bipartite_double_cover(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut b = Graph::new(2 * n)?;
    for (u, v) in g.edges() {
        b.add_edge(u, n + v)?;
        b.add_edge(v, n + u)?;
    }
    Ok(b)
}

/// Maximum matching of the double cover, computed on the adjacency rows:
/// `right[v] = Some(u)` pairs left `u` with right `v`.
fn cover_matching(g: &Graph) -> (usize, Vec<Option<usize>>) {
    let n = g.order();
    let mut right: Vec<Option<usize>> = vec![None; n];
    let mut size = 0;
    for u in 0..n {
        let mut seen = 0u64;
        if augment(g, u, &mut seen, &mut right) {
            size += 1;
        }
    }
    (size, right)
}

fn augment(g: &Graph, u: usize, seen: &mut u64, right: &mut [Option<usize>]) -> bool {
    for v in bits(g.neighbors(u) & !*seen) {
        *seen |= 1 << v;
        if right[v].is_none_or(|w| augment(g, w, seen, right)) {
            right[v] = Some(u);
            return true;
        }
    }
    false
}

pub fn fractional_matching_number(g: &Graph) -> HalfInt {
    HalfInt(cover_matching(g).0 as u64)
}

pub fn has_fpm(g: &Graph) -> bool {
    cover_matching(g).0 == g.order()
}

/// Decide fractional-perfect-matching existence with a certificate either way.
pub fn decide_fpm(g: &Graph) -> FpmDecision {
    let n = g.order();
    let (size, right) = cover_matching(g);
    if size < n {
        let witness = if n <= SUBSET_ORACLE_CAP {
            match fpm_by_subset_condition(g).expect("order within oracle cap") {
                Condition::ViolatedBy(s) => Some(NoFpmWitness { s }),
                Condition::Holds => unreachable!("double cover and subset condition disagree"),
            }
        } else {
            None
        };
        return FpmDecision::Deficient(witness);
    }
    let mut sigma = vec![0usize; n];
    for (v, u) in right.iter().enumerate() {
        sigma[u.expect("perfect cover matching")] = v;
    }
    let mut entries = Vec::new();
    let mut done = 0u64;
    for start in 0..n {
        if done >> start & 1 == 1 {
            continue;
        }
        let mut cycle = vec![start];
        let mut v = sigma[start];
        while v != start {
            cycle.push(v);
            v = sigma[v];
        }
        for &v in &cycle {
            done |= 1 << v;
        }
        let len = cycle.len();
        if len % 2 == 0 {
            for pair in cycle.chunks(2) {
                entries.push((pair[0], pair[1], Weight::One));
            }
        } else {
            for i in 0..len {
                entries.push((cycle[i], cycle[(i + 1) % len], Weight::Half));
            }
        }
    }
    FpmDecision::Perfect(HalfIntegralMatching::new(n, entries))
}

/// `i(G - S) <= |S|` for every `S`, by enumerating all subsets.
pub fn fpm_by_subset_condition(g: &Graph) -> Result<Condition> {
    let n = g.order();
    if n > SUBSET_ORACLE_CAP {
        return Err(Error::cap("subset oracle order", SUBSET_ORACLE_CAP, n));
    }
    let bad = first_subset(n, |s| g.isolated_count_mask(s) > s.count_ones() as usize);
    Ok(match bad {
        None => Condition::Holds,
        Some(s) => Condition::ViolatedBy(VertexSet::from_mask(n, s)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn double_covers() {
        let c5 = bipartite_double_cover(&cycle(5)).unwrap();
        assert_eq!(c5.order(), 10);
        assert!(c5.is_connected());
        assert!((0..10).all(|v| c5.degree(v) == 2));

        let k2 = bipartite_double_cover(&complete(2)).unwrap();
        assert_eq!(k2.size(), 2);
        assert_eq!(k2.components().len(), 2);

        let c4 = bipartite_double_cover(&cycle(4)).unwrap();
        assert_eq!(c4.components().len(), 2);
        assert!(c4.components().iter().all(|c| c.count_ones() == 4));
        assert!((0..8).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn fractional_numbers() {
        assert_eq!(fractional_matching_number(&cycle(5)).to_string(), "5/2");
        assert_eq!(fractional_matching_number(&star(3)), HalfInt::from_int(1));
        assert_eq!(fractional_matching_number(&complete(4)), HalfInt::from_int(2));
    }

    #[test]
    fn five_cycle_gets_all_halves() {
        match decide_fpm(&cycle(5)) {
            FpmDecision::Perfect(f) => {
                assert_eq!(f.entries().len(), 5);
                assert!(f.entries().iter().all(|e| e.2 == Weight::Half));
                FpmCertificate::Matching(f.clone()).validate(&cycle(5)).unwrap();
                let blocks = f.to_partition();
                assert_eq!(blocks.len(), 1);
                FpmCertificate::Partition(blocks).validate(&cycle(5)).unwrap();
            }
            other => panic!("C5 has a fractional perfect matching, got {other:?}"),
        }
    }

    #[test]
    fn deficient_witnesses() {
        for (g, s) in [(star(3), vec![0]), (path(3), vec![1])] {
            match decide_fpm(&g) {
                FpmDecision::Deficient(Some(w)) => {
                    assert_eq!(w.s.to_vec(), s);
                    w.validate(&g).unwrap();
                }
                other => panic!("expected deficiency, got {other:?}"),
            }
        }
    }

    #[test]
    fn subset_condition() {
        assert!(fpm_by_subset_condition(&complete(3)).unwrap().holds());
        assert!(fpm_by_subset_condition(&copies(&complete(2), 2)).unwrap().holds());
        assert_eq!(
            fpm_by_subset_condition(&star(3)).unwrap(),
            Condition::ViolatedBy(VertexSet::from_vertices(4, &[0]).unwrap())
        );
        assert!(fpm_by_subset_condition(&empty(21)).is_err());
    }

    #[test]
    fn even_cycles_become_integral() {
        match decide_fpm(&cycle(6)) {
            FpmDecision::Perfect(f) => {
                assert!(f.entries().iter().all(|e| e.2 == Weight::One));
                assert_eq!(f.entries().len(), 3);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn bad_certificates_rejected() {
        let g = cycle(5);
        let path_half = HalfIntegralMatching::new(5, [(0, 1, Weight::Half), (1, 2, Weight::Half)]);
        assert!(path_half.validate(&g).is_err());
        let overload = HalfIntegralMatching::new(5, [(0, 1, Weight::One), (1, 2, Weight::One)]);
        assert!(overload.validate(&g).is_err());
        let c4 = cycle(4);
        let even = HalfIntegralMatching::new(4, (0..4).map(|i| (i, (i + 1) % 4, Weight::Half)));
        assert!(even.validate(&c4).is_err());
        let block = PartitionBlock { vertices: vec![0], cycle: None };
        assert!(FpmCertificate::Partition(vec![block]).validate(&empty(1)).is_err());
        let w = NoFpmWitness { s: VertexSet::empty(5) };
        assert!(w.validate(&g).is_err());
    }
}

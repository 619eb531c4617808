//! Integral and fractional matchings.

mod blossom;
mod fractional;
mod hamilton;
mod partition;

pub use fractional::{
    bipartite_double_cover, decide_fpm, fpm_by_subset_condition, fractional_matching_number, has_fpm,
    FpmCertificate, FpmDecision, HalfInt, HalfIntegralMatching, NoFpmWitness, PartitionBlock, Weight,
    SUBSET_ORACLE_CAP,
};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian, HAMILTONIAN_CAP};
pub use partition::{fpm_by_partition, PARTITION_CAP};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Combinations, Graph, VertexSet};

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut used = 0u64;
        let mut out = Vec::new();
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
            }
            if used >> u & 1 == 1 || used >> v & 1 == 1 {
                return Err(Error::invalid(format!("({u}, {v}) shares a vertex with another edge")));
            }
            used |= 1 << u | 1 << v;
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { n: g.order(), edges: out })
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices covered by the matching.
    pub fn covered(&self) -> u64 {
        self.edges.iter().fold(0, |m, &(u, v)| m | 1 << u | 1 << v)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        Matching::new(g, self.edges.iter().copied()).is_ok() && self.n == g.order()
    }
}

/// A maximum-cardinality matching. The edge set is one of possibly many.
pub fn max_matching(g: &Graph) -> Matching {
    let mate = blossom::maximum_mates(g);
    let edges = (0..g.order())
        .filter(|&u| mate[u] != usize::MAX && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    Matching { n: g.order(), edges }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && max_matching(g).size() == g.order() / 2
}

pub fn has_almost_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 1 && max_matching(g).size() == g.order() / 2
}

/// Outcome of a subset-enumeration oracle: the condition holds for every
/// subset, or fails at the first subset in (size, lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Holds,
    ViolatedBy(VertexSet),
}

impl Condition {
    pub fn holds(&self) -> bool {
        matches!(self, Condition::Holds)
    }
}

/// First subset `S` (by size, then lexicographically) with `pred(S)`.
pub(crate) fn first_subset(n: usize, mut pred: impl FnMut(u64) -> bool) -> Option<u64> {
    (0..=n).find_map(|k| Combinations::new(full_mask(n), k).find(|&s| pred(s)))
}

/// Tutte's condition `o(G - S) <= |S|` for every `S`, by enumerating all
/// `2^n` subsets. Independent of the blossom search.
pub fn perfect_matching_by_tutte(g: &Graph) -> Result<Condition> {
    let n = g.order();
    if n > SUBSET_ORACLE_CAP {
        return Err(Error::cap("subset oracle order", SUBSET_ORACLE_CAP, n));
    }
    let bad = first_subset(n, |s| g.odd_component_count_mask(s) > s.count_ones() as usize);
    Ok(match bad {
        None => Condition::Holds,
        Some(s) => Condition::ViolatedBy(VertexSet::from_mask(n, s)?),
    })
}

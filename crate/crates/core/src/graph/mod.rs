//! Simple undirected graphs on at most 64 vertices.
//!
//! Every neighbourhood is a single `u64` row, so vertex subsets are plain
//! bitmasks and most structural queries reduce to a handful of popcounts.

mod combinations;
mod edgelist;
mod enumerate;
mod graph6;
mod invariant;

pub use combinations::Combinations;
pub use edgelist::{edge_list_decode, edge_list_encode};
pub use enumerate::{pair_count, EnumOptions, GraphIter, DEFAULT_ENUM_CAP, HARD_ENUM_CAP};
pub use graph6::{graph6_decode, graph6_encode};
pub use invariant::InvariantKey;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Bitmask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate over the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::cap("graph order", MAX_ORDER, n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::cap("graph order", MAX_ORDER, n));
        }
        let full = full_mask(n);
        let mut deg_sum = 0usize;
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::invalid(format!("row {v} references a vertex >= {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::invalid(format!("self-loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric pair ({v}, {u})")));
                }
            }
            deg_sum += row.count_ones() as usize;
        }
        Ok(Graph {
            n,
            adj: rows,
            edges: deg_sum / 2,
        })
    }

    /// Insert the edge `uv`. Returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edges += 1;
        Ok(true)
    }

    pub(crate) fn toggle_edge_unchecked(&mut self, u: usize, v: usize) {
        let was = self.adj[u] >> v & 1 == 1;
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
        if was {
            self.edges -= 1;
        } else {
            self.edges += 1;
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "pair ({u}, {v}) out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj: Vec<u64> = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        let total = self.n * self.n.saturating_sub(1) / 2;
        Graph {
            n: self.n,
            adj,
            edges: total - self.edges,
        }
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::cap("graph order", MAX_ORDER, n));
        }
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << shift));
        Ok(Graph {
            n,
            adj,
            edges: self.edges + other.edges,
        })
    }

    /// Disjoint union of several graphs, in order.
    pub fn union_all<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Result<Graph> {
        let mut acc = Graph::new(0)?;
        for p in parts {
            acc = acc.disjoint_union(p)?;
        }
        Ok(acc)
    }

    /// Subgraph induced by `mask`, relabelled to `0..popcount(mask)` in
    /// increasing vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let keep: Vec<usize> = bits(mask).collect();
        let adj: Vec<u64> = keep
            .iter()
            .map(|&v| compress(self.adj[v] & mask, mask))
            .collect();
        let edges = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            n: keep.len(),
            adj,
            edges,
        }
    }

    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Graph> {
        if set.order() != self.n {
            return Err(Error::invalid(format!(
                "vertex set built for order {} applied to order {}",
                set.order(),
                self.n
            )));
        }
        Ok(self.induced(self.vertex_mask() & !set.mask()))
    }

    pub fn delete_edges(&self, set: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in set.pairs() {
            if !self.has_edge(u, v) {
                return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
            }
            g.toggle_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Same graph with the edge `uv` removed; error if absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
        }
        let mut g = self.clone();
        g.toggle_edge_unchecked(u, v);
        Ok(g)
    }

    /// Connected components of `G[mask]` as vertex masks, ordered by least vertex.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut left = mask & self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let seed = left & left.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= mask & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of isolated vertices of `G - S` (`S` given as a mask).
    #[inline]
    pub fn isolated_count_mask(&self, s: u64) -> usize {
        let rest = self.vertex_mask() & !s;
        bits(rest).filter(|&v| self.adj[v] & rest == 0).count()
    }

    /// Number of odd-order components of `G - S`.
    pub fn odd_component_count_mask(&self, s: u64) -> usize {
        let rest = self.vertex_mask() & !s;
        self.components_within(rest)
            .into_iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .count()
    }

    pub fn isolated_count(&self, s: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        Ok(self.isolated_count_mask(s.mask()))
    }

    pub fn odd_component_count(&self, s: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        Ok(self.odd_component_count_mask(s.mask()))
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.order() != self.n {
            return Err(Error::invalid(format!(
                "vertex set built for order {} used with order {}",
                s.order(),
                self.n
            )));
        }
        Ok(())
    }

    /// Edges with both ends in `a`.
    #[inline]
    pub fn edges_within(&self, a: u64) -> usize {
        bits(a).map(|v| (self.adj[v] & a).count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges with one end in `a` and the other in `b` (`a`, `b` disjoint).
    #[inline]
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        bits(a).map(|v| (self.adj[v] & b).count_ones() as usize).sum()
    }

    pub fn invariant_key(&self) -> InvariantKey {
        InvariantKey::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// Pack the bits of `x` selected by `mask` into the low bits.
fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (i, v) in bits(mask).enumerate() {
        out |= (x >> v & 1) << i;
    }
    out
}

/// A subset of `{0, .., n-1}` for a fixed order `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    mask: u64,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, mask: 0 }
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::cap("graph order", MAX_ORDER, n));
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::invalid(format!("vertex set has members >= {n}")));
        }
        Ok(VertexSet { n, mask })
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vs {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range for order {n}")));
            }
            mask |= 1 << v;
        }
        VertexSet::from_mask(n, mask)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.mask >> v & 1 == 1
    }

    pub fn to_vec(&self) -> Vec<usize> {
        bits(self.mask).collect()
    }
}

/// Unordered vertex pairs, stored as `(min, max)` in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSet {
    pairs: Vec<(usize, usize)>,
}

impl EdgeSet {
    /// Every pair must be an edge of `g`.
    pub fn new(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!("({u}, {v}) is not an edge")));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(EdgeSet { pairs: out })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("order within cap");
        for u in 0..n {
            for v in u + 1..n {
                g.toggle_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n).expect("order within cap")
    }

    /// Cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = path(n);
        g.toggle_edge_unchecked(0, n - 1);
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("order within cap");
        for v in 1..n {
            g.toggle_edge_unchecked(v - 1, v);
        }
        g
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1).expect("order within cap");
        for v in 1..=leaves {
            g.toggle_edge_unchecked(0, v);
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10).expect("order within cap");
        for i in 0..5 {
            g.toggle_edge_unchecked(i, (i + 1) % 5);
            g.toggle_edge_unchecked(i, i + 5);
            g.toggle_edge_unchecked(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// `copies` disjoint copies of `g`.
    pub fn copies(g: &Graph, copies: usize) -> Graph {
        let parts = vec![g.clone(); copies];
        Graph::union_all(parts.iter()).expect("order within cap")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn cycle_minus_vertex_is_path() {
        let g = cycle(5);
        let h = g.delete_vertices(&VertexSet::from_vertices(5, &[0]).unwrap()).unwrap();
        assert_eq!(h, path(4));
    }

    #[test]
    fn triangle_minus_edge() {
        let g = complete(3);
        let h = g.delete_edges(&EdgeSet::new(&g, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(h.size(), 2);
        assert!(h.has_edge(0, 2) && h.has_edge(1, 2));
        assert_eq!(h.order(), 3);
        // input untouched
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn k4_minus_two_vertices() {
        let g = complete(4);
        let h = g.delete_vertices(&VertexSet::from_vertices(4, &[0, 1]).unwrap()).unwrap();
        assert_eq!(h, complete(2));
    }

    #[test]
    fn deletion_errors() {
        let g = path(3);
        assert!(EdgeSet::new(&g, [(0, 2)]).is_err());
        assert!(VertexSet::from_vertices(3, &[3]).is_err());
        let other = VertexSet::from_vertices(4, &[0]).unwrap();
        assert!(g.delete_vertices(&other).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::new(65).is_err());
    }

    #[test]
    fn isolated_counts() {
        let star = star(3);
        let c = VertexSet::from_vertices(4, &[0]).unwrap();
        assert_eq!(star.isolated_count(&c).unwrap(), 3);
        assert_eq!(cycle(5).isolated_count(&VertexSet::empty(5)).unwrap(), 0);
        let c4 = cycle(4);
        let s = VertexSet::from_vertices(4, &[1, 3]).unwrap();
        assert_eq!(c4.isolated_count(&s).unwrap(), 2);
    }

    #[test]
    fn odd_component_counts() {
        let c6 = cycle(6);
        let s = VertexSet::from_vertices(6, &[0, 3]).unwrap();
        assert_eq!(c6.odd_component_count(&s).unwrap(), 0);
        let adj = VertexSet::from_vertices(6, &[0, 1]).unwrap();
        assert_eq!(c6.odd_component_count(&adj).unwrap(), 0);
        let centre = VertexSet::from_vertices(4, &[0]).unwrap();
        assert_eq!(star(3).odd_component_count(&centre).unwrap(), 3);
        assert_eq!(path(3).odd_component_count(&VertexSet::empty(3)).unwrap(), 1);
    }

    #[test]
    fn complement_and_union() {
        let g = petersen();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.size() + g.complement().size(), 45);
        let u = cycle(5).disjoint_union(&complete(2)).unwrap();
        assert_eq!(u.order(), 7);
        assert_eq!(u.size(), 6);
        assert_eq!(u.components().len(), 2);
        assert!(u.has_edge(5, 6));
    }

    #[test]
    fn from_rows_validates() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        let g = Graph::from_rows(vec![0b10, 0b01]).unwrap();
        assert_eq!(g, complete(2));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.size(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }
}

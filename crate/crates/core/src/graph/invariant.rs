//! Cheap isomorphism invariant: degree colouring refined by sorted
//! neighbour-colour multisets until the partition stops splitting.
//!
//! Isomorphic graphs always get equal keys. The converse fails (regular
//! graphs of equal order and degree collide), so keys may group work or
//! reports but never decide that two graphs are the same.

use super::{bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantKey(Vec<u32>);

impl InvariantKey {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
        let mut key = vec![n as u32, g.size() as u32];
        let mut classes = distinct(&colour);
        loop {
            let sigs: Vec<Vec<u32>> = (0..n)
                .map(|v| {
                    let mut s: Vec<u32> = bits(g.neighbors(v)).map(|u| colour[u]).collect();
                    s.sort_unstable();
                    s.insert(0, colour[v]);
                    s
                })
                .collect();
            let mut sorted = sigs.clone();
            sorted.sort();
            sorted.dedup();
            colour = sigs
                .iter()
                .map(|s| sorted.binary_search(s).expect("present") as u32)
                .collect();
            for s in &sorted {
                key.push(u32::MAX);
                key.extend_from_slice(s);
            }
            let mut hist: Vec<u32> = colour.clone();
            hist.sort_unstable();
            key.push(u32::MAX - 1);
            key.extend(hist);
            let now = distinct(&colour);
            if now == classes {
                break;
            }
            classes = now;
        }
        InvariantKey(key)
    }
}

fn distinct(c: &[u32]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn relabelling_preserves_key() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(a.invariant_key(), b.invariant_key());
        assert_ne!(a.invariant_key(), path(5).invariant_key());
    }

    #[test]
    fn regular_graphs_collide() {
        // C6 and 2C3 are not isomorphic but refinement cannot tell them apart
        let two_triangles = copies(&complete(3), 2);
        assert_eq!(cycle(6).invariant_key(), two_triangles.invariant_key());
    }
}

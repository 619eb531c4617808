//! Integral matching preclusion number by hitting-set branching.
//!
//! Any deletion set that destroys every near-perfect matching must contain
//! an edge of whichever maximum matching currently survives, so branching
//! over the edges of one maximum matching is complete. Depth is raised one
//! step at a time, so the first success is optimal.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::max_matching;

/// Search nodes visited before giving up.
pub const MP_NODE_BUDGET: u64 = 20_000_000;

/// Fewest edges whose deletion leaves neither a perfect nor an
/// almost-perfect matching; `0` if `g` already has neither.
pub fn mp(g: &Graph) -> Result<usize> {
    mp_with_budget(g, MP_NODE_BUDGET)
}

pub fn mp_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("mp is undefined below two vertices"));
    }
    let target = n / 2;
    if max_matching(g).size() < target {
        return Ok(0);
    }
    let cap = if n % 2 == 0 { g.min_degree() } else { g.size() };
    let mut st = State {
        target,
        budget,
        nodes: 0,
        failed: HashSet::new(),
    };
    for depth in 1..=cap {
        st.failed.clear();
        if st.kill(&mut g.clone(), depth)? {
            return Ok(depth);
        }
    }
    // for even order isolating a vertex always works, and removing every
    // edge always works otherwise
    unreachable!("cap deletion not found")
}

struct State {
    target: usize,
    budget: u64,
    nodes: u64,
    failed: HashSet<(Vec<u64>, usize)>,
}

impl State {
    fn kill(&mut self, h: &mut Graph, depth: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(format!("mp search exceeded {} nodes", self.budget)));
        }
        let m = max_matching(h);
        if m.size() < self.target {
            return Ok(true);
        }
        if depth == 0 {
            return Ok(false);
        }
        let key = (h.rows().to_vec(), depth);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        for &(u, v) in m.edges() {
            h.toggle_edge_unchecked(u, v);
            let hit = self.kill(h, depth - 1)?;
            h.toggle_edge_unchecked(u, v);
            if hit {
                return Ok(true);
            }
        }
        self.failed.insert(key);
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_values() {
        assert_eq!(mp(&complete(4)).unwrap(), 3);
        assert_eq!(mp(&cycle(6)).unwrap(), 2);
        assert_eq!(mp(&star(3)).unwrap(), 0);
        assert_eq!(mp(&complete(2)).unwrap(), 1);
        assert_eq!(mp(&path(3)).unwrap(), 2);
        assert_eq!(mp(&petersen()).unwrap(), 3);
        assert!(mp(&complete(1)).is_err());
    }

    /// Literal definition over edge subsets.
    fn mp_by_subsets(g: &Graph) -> usize {
        let edges = g.edge_list();
        let target = g.order() / 2;
        (0..=edges.len())
            .find(|&k| {
                crate::graph::Combinations::new(crate::graph::full_mask(edges.len()), k).any(|f| {
                    let mut h = g.clone();
                    for j in crate::graph::bits(f) {
                        h.toggle_edge_unchecked(edges[j].0, edges[j].1);
                    }
                    max_matching(&h).size() < target
                })
            })
            .unwrap()
    }

    #[test]
    fn agrees_with_subset_definition() {
        for g in [complete(5), cycle(7), complete(6), path(5), complete(3).disjoint_union(&complete(4)).unwrap()] {
            assert_eq!(mp(&g).unwrap(), mp_by_subsets(&g), "{g:?}");
        }
    }
}

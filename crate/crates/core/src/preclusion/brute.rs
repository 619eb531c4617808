//! Edge-subset oracle: try every `F` by increasing `|F|` and test `G - F`
//! directly. Shares nothing with the `(S, I)` search except the witness type.

use super::{check_order, FmpWitness, Method, PreclusionResult};
use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Combinations, Graph, VertexSet};
use crate::matching::{fpm_by_subset_condition, has_fpm, Condition, SUBSET_ORACLE_CAP};

/// Edge subsets tried before giving up.
pub const BRUTE_SUBSET_BUDGET: u64 = 200_000_000;

/// Smallest `|F| <= k_max` such that `G - F` has no fractional perfect
/// matching, or `None` when every such `F` leaves one.
pub fn fmp_bruteforce(g: &Graph, k_max: usize) -> Result<Option<PreclusionResult>> {
    fmp_bruteforce_with_budget(g, k_max, BRUTE_SUBSET_BUDGET)
}

pub fn fmp_bruteforce_with_budget(g: &Graph, k_max: usize, budget: u64) -> Result<Option<PreclusionResult>> {
    check_order(g)?;
    let edges = g.edge_list();
    if edges.len() > 64 {
        return Err(Error::cap("edge-subset oracle size", 64, edges.len()));
    }
    if !has_fpm(g) {
        return Ok(Some(PreclusionResult {
            value: 0,
            witness: None,
            method: Method::Oracle,
        }));
    }
    let mut tried = 0u64;
    for k in 1..=k_max.min(edges.len()) {
        for fmask in Combinations::new(full_mask(edges.len()), k) {
            tried += 1;
            if tried > budget {
                return Err(Error::BudgetExhausted(format!(
                    "{budget} edge subsets tried without reaching size {k_max}"
                )));
            }
            let mut rows = g.rows().to_vec();
            for j in bits(fmask) {
                let (u, v) = edges[j];
                rows[u] &= !(1 << v);
                rows[v] &= !(1 << u);
            }
            let h = Graph::from_rows(rows)?;
            if !has_fpm(&h) {
                let witness = witness_from_deletion(g, &h)?;
                return Ok(Some(PreclusionResult {
                    value: k,
                    witness: Some(witness),
                    method: Method::Oracle,
                }));
            }
        }
    }
    Ok(None)
}

/// Turn a deletion that kills every fractional perfect matching into an
/// isolation pair: `S` violating the subset condition and the first
/// `|S| + 1` vertices isolated in `H - S`.
fn witness_from_deletion(g: &Graph, h: &Graph) -> Result<FmpWitness> {
    let n = g.order();
    let s = if n <= SUBSET_ORACLE_CAP {
        match fpm_by_subset_condition(h)? {
            Condition::ViolatedBy(s) => s,
            Condition::Holds => return Err(Error::invalid("deleted graph still satisfies the subset condition")),
        }
    } else {
        super::isolation_witness(h)?.ok_or_else(|| Error::invalid("no isolation witness in deleted graph"))?
    };
    let rest = h.vertex_mask() & !s.mask();
    let isolated: Vec<usize> = bits(rest).filter(|&v| h.neighbors(v) & rest == 0).collect();
    let i = VertexSet::from_vertices(n, &isolated[..s.len() + 1])?;
    FmpWitness::from_sets(g, s, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::preclusion::fmp;

    #[test]
    fn oracle_values() {
        assert_eq!(fmp_bruteforce(&cycle(5), 5).unwrap().unwrap().value, 1);
        assert_eq!(fmp_bruteforce(&complete(2), 1).unwrap().unwrap().value, 1);
        let h2 = copies(&complete(2), 3).disjoint_union(&complete(3)).unwrap();
        assert_eq!(fmp_bruteforce(&h2, 3).unwrap().unwrap().value, 1);
        assert_eq!(fmp_bruteforce(&complete(5), 10).unwrap().unwrap().value, 3);
        assert_eq!(fmp_bruteforce(&cycle(4), 4).unwrap().unwrap().value, 2);
        assert_eq!(fmp_bruteforce(&star(3), 0).unwrap().unwrap().value, 0);
    }

    #[test]
    fn limit_and_budget() {
        assert_eq!(fmp_bruteforce(&cycle(4), 1).unwrap(), None);
        assert!(matches!(
            fmp_bruteforce_with_budget(&complete(6), 6, 10),
            Err(Error::BudgetExhausted(_))
        ));
    }

    #[test]
    fn oracle_witness_matches_search_cost() {
        for g in [cycle(5), complete(4), petersen().induced(0b11111111), path(6)] {
            let a = fmp(&g).unwrap();
            let b = fmp_bruteforce(&g, g.size()).unwrap().unwrap();
            assert_eq!(a.value, b.value);
            if let Some(w) = b.witness {
                w.validate(&g).unwrap();
                assert_eq!(w.cost(), b.value);
            }
        }
    }
}

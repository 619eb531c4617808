//! Hamiltonicity by dynamic programming over vertex subsets.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph};

/// Largest order accepted by the subset DP (`2^(n-1)` words of table).
pub const HAMILTONIAN_CAP: usize = 24;

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    Ok(hamiltonian_cycle(g)?.is_some())
}

/// A Hamiltonian cycle starting at vertex 0, if one exists. Graphs with
/// fewer than three vertices have none.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > HAMILTONIAN_CAP {
        return Err(Error::cap("hamiltonicity order", HAMILTONIAN_CAP, n));
    }
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return Ok(None);
    }
    // ends[S] = vertices v in S such that some path starts at 0, visits
    // exactly {0} + S and ends at v; S ranges over subsets of 1..n
    let others = n - 1;
    let mut ends = vec![0u32; 1 << others];
    for v in bits(g.neighbors(0)) {
        ends[1 << (v - 1)] = 1 << (v - 1);
    }
    for s in 1..ends.len() {
        let e = ends[s];
        if e == 0 {
            continue;
        }
        let mut reach = 0u32;
        for v in bits(e as u64) {
            reach |= (g.neighbors(v + 1) >> 1) as u32;
        }
        for w in bits(reach as u64 & !(s as u64)) {
            ends[s | 1 << w] |= 1 << w;
        }
    }
    let all = full_mask(others) as usize;
    let closing = ends[all] & (g.neighbors(0) >> 1) as u32;
    if closing == 0 {
        return Ok(None);
    }
    // walk back from the lowest closing endpoint
    let mut cycle = Vec::with_capacity(n);
    let mut s = all;
    let mut v = closing.trailing_zeros() as usize;
    loop {
        cycle.push(v + 1);
        let prev = s & !(1 << v);
        if prev == 0 {
            break;
        }
        let cand = ends[prev] & (g.neighbors(v + 1) >> 1) as u32;
        v = cand.trailing_zeros() as usize;
        s = prev;
    }
    cycle.push(0);
    cycle.reverse();
    Ok(Some(cycle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check_cycle(g: &Graph, c: &[usize]) {
        assert_eq!(c.len(), g.order());
        let mut seen = c.to_vec();
        seen.sort_unstable();
        assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn small_cases() {
        assert!(is_hamiltonian(&cycle(7)).unwrap());
        assert!(!is_hamiltonian(&star(3)).unwrap());
        assert!(!is_hamiltonian(&complete(2)).unwrap());
        assert!(!is_hamiltonian(&complete(1)).unwrap());
        assert!(is_hamiltonian(&complete(3)).unwrap());
        let c = hamiltonian_cycle(&complete(6)).unwrap().unwrap();
        check_cycle(&complete(6), &c);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        assert!(!is_hamiltonian(&petersen()).unwrap());
        // but Petersen minus a vertex is
        let p9 = petersen().induced(full_mask(9));
        let c = hamiltonian_cycle(&p9).unwrap().unwrap();
        check_cycle(&p9, &c);
    }

    #[test]
    fn cap() {
        assert!(is_hamiltonian(&cycle(25)).is_err());
        assert!(is_hamiltonian(&cycle(20)).unwrap());
    }
}

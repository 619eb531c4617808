//! Partition oracle: `V(G)` splits into blocks inducing `K2` or an
//! odd-order Hamiltonian graph exactly when a fractional perfect matching exists.

use super::fractional::PartitionBlock;
use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph};

/// Largest order accepted by [`fpm_by_partition`].
pub const PARTITION_CAP: usize = 12;

/// Memoised search over vertex subsets. The block holding the lowest
/// remaining vertex is tried as an edge first (partner ascending), then as
/// an odd Hamiltonian block in increasing mask order.
pub fn fpm_by_partition(g: &Graph) -> Result<Option<Vec<PartitionBlock>>> {
    let n = g.order();
    if n > PARTITION_CAP {
        return Err(Error::cap("partition oracle order", PARTITION_CAP, n));
    }
    let paths = PathTable::new(g);
    // 0 unknown, 1 impossible, 2 possible
    let mut memo = vec![0u8; 1 << n];
    let mut choice = vec![0u64; 1 << n];
    memo[0] = 2;
    if !solve(g, &paths, full_mask(n), &mut memo, &mut choice) {
        return Ok(None);
    }
    let mut blocks = Vec::new();
    let mut left = full_mask(n);
    while left != 0 {
        let b = choice[left as usize];
        blocks.push(if b.count_ones() == 2 {
            PartitionBlock {
                vertices: bits(b).collect(),
                cycle: None,
            }
        } else {
            PartitionBlock {
                vertices: bits(b).collect(),
                cycle: Some(paths.cycle(g, b)),
            }
        });
        left &= !b;
    }
    Ok(Some(blocks))
}

fn solve(g: &Graph, paths: &PathTable, mask: u64, memo: &mut [u8], choice: &mut [u64]) -> bool {
    match memo[mask as usize] {
        1 => return false,
        2 => return true,
        _ => {}
    }
    let low = mask & mask.wrapping_neg();
    let v = low.trailing_zeros() as usize;
    let rest = mask & !low;
    for w in bits(g.neighbors(v) & rest) {
        let block = low | 1 << w;
        if solve(g, paths, mask & !block, memo, choice) {
            memo[mask as usize] = 2;
            choice[mask as usize] = block;
            return true;
        }
    }
    // odd blocks of size >= 3: enumerate submasks of `rest` in increasing order
    let mut sub: u64 = 0;
    loop {
        sub = sub.wrapping_sub(rest) & rest;
        if sub == 0 {
            break;
        }
        let block = low | sub;
        let k = block.count_ones();
        if k >= 3 && k % 2 == 1 && paths.is_hamiltonian_block(g, block) && solve(g, paths, mask & !block, memo, choice) {
            memo[mask as usize] = 2;
            choice[mask as usize] = block;
            return true;
        }
    }
    memo[mask as usize] = 1;
    false
}

/// `ends[S]`: vertices `v` such that `G[S]` has a Hamiltonian path from
/// the least vertex of `S` to `v`.
struct PathTable {
    ends: Vec<u64>,
}

impl PathTable {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut ends = vec![0u64; 1 << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for s in 1..1usize << n {
            let e = ends[s];
            if e == 0 {
                continue;
            }
            let low = s & s.wrapping_neg();
            let mut reach = 0u64;
            for v in bits(e) {
                reach |= g.neighbors(v);
            }
            // extensions must stay above the start vertex
            reach &= !(s as u64) & !((low as u64) * 2 - 1);
            for w in bits(reach) {
                ends[s | 1 << w] |= 1 << w;
            }
        }
        PathTable { ends }
    }

    fn is_hamiltonian_block(&self, g: &Graph, block: u64) -> bool {
        let low = block.trailing_zeros() as usize;
        block.count_ones() >= 3 && self.ends[block as usize] & g.neighbors(low) != 0
    }

    fn cycle(&self, g: &Graph, block: u64) -> Vec<usize> {
        let low = block.trailing_zeros() as usize;
        let mut v = (self.ends[block as usize] & g.neighbors(low)).trailing_zeros() as usize;
        let mut s = block;
        let mut out = Vec::new();
        while v != low {
            out.push(v);
            let prev = s & !(1 << v);
            v = (self.ends[prev as usize] & g.neighbors(v)).trailing_zeros() as usize;
            s = prev;
        }
        out.push(low);
        out.reverse();
        out
    }
}

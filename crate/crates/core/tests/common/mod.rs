#![allow(dead_code)]

use std::time::{Duration, Instant};

use fmplab::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Add random edges at low-degree vertices until the minimum degree is `d`.
pub fn raise_min_degree(rng: &mut ChaCha8Rng, mut g: Graph, d: usize) -> Graph {
    let n = g.order();
    assert!(d < n);
    while let Some(v) = (0..n).find(|&v| g.degree(v) < d) {
        let free: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
        let u = free[rng.gen_range(0..free.len())];
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Join offending non-adjacent pairs until every such pair has degree sum `>= n`.
pub fn make_ore(rng: &mut ChaCha8Rng, mut g: Graph) -> Graph {
    let n = g.order();
    loop {
        let bad: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v) && g.degree(u) + g.degree(v) < n)
            .collect();
        if bad.is_empty() {
            return g;
        }
        let (u, v) = bad[rng.gen_range(0..bad.len())];
        g.add_edge(u, v).unwrap();
    }
}

pub fn is_ore(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || g.degree(u) + g.degree(v) >= n))
}

/// Print the one-line verdict of an acceptance criterion and fail the test
/// if it did not hold within `limit`.
pub fn verdict(id: &str, start: Instant, limit: Duration, ok: bool, detail: &str) {
    let took = start.elapsed();
    let ok = ok && took <= limit;
    println!(
        "{id} {} {detail} [{:.2}s, limit {}s]",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        limit.as_secs()
    );
    assert!(ok, "{id} failed: {detail}");
}

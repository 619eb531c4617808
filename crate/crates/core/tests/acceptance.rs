//! Acceptance criteria 1 to 10. Each test prints one PASS/FAIL line.
//!
//! cargo test --release -p fmplab --test acceptance -- --nocapture --test-threads 1

mod common;

use std::time::{Duration, Instant};

use common::{is_ore, make_ore, raise_min_degree, random_graph, verdict};
use fmplab::extremal::{
    f_verify, fmp_census, s2_lowerbound_search, s_construction, s_exact, threshold_verify, Budget,
};
use fmplab::families::{h_family, s_witness, SCase};
use fmplab::graph::{graph6_encode, named, pair_count, EnumOptions};
use fmplab::matching::{
    fpm_by_partition, fpm_by_subset_condition, has_fpm, has_perfect_matching, is_hamiltonian,
    perfect_matching_by_tutte,
};
use fmplab::preclusion::{fmp, fmp_bruteforce, mp};
use fmplab::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MIN: u64 = 60;

fn all_graphs(n: usize) -> Vec<Graph> {
    EnumOptions::new(n).iter().unwrap().collect()
}

#[test]
fn c01_complete_graphs() {
    let t = Instant::now();
    let values: Vec<usize> = (7..=11).map(|n| fmp(&named::complete(n)).unwrap().value).collect();
    let ok = values == vec![6, 7, 8, 9, 10];
    verdict("C1", t, Duration::from_secs(60), ok, &format!("fmp(K7..K11) = {values:?}"));
}

#[test]
fn c02_fmp_matches_edge_subset_oracle() {
    let t = Instant::now();
    let graphs = all_graphs(6);
    let bad_small = graphs
        .par_iter()
        .filter(|g| {
            let oracle = fmp_bruteforce(g, g.size()).unwrap().unwrap().value;
            fmp(g).unwrap().value != oracle
        })
        .count();

    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let samples: Vec<Graph> = (0..2000)
        .map(|_| {
            let n = rng.gen_range(7..=10);
            let p = rng.gen_range(0.15..0.7);
            random_graph(&mut rng, n, p)
        })
        .collect();
    let bad_random = samples
        .par_iter()
        .filter(|g| fmp(g).unwrap().value != fmp_bruteforce(g, g.size()).unwrap().unwrap().value)
        .count();
    verdict(
        "C2",
        t,
        Duration::from_secs(10 * MIN),
        graphs.len() == 1 << 15 && bad_small == 0 && bad_random == 0,
        &format!("{} graphs on 6 vertices, {bad_small} mismatches; 2000 random (n 7..10), {bad_random} mismatches", graphs.len()),
    );
}

#[test]
fn c03_fpm_three_ways() {
    let t = Instant::now();
    let mut total = 0;
    let mut bad = 0;
    for n in 1..=6 {
        for g in all_graphs(n) {
            total += 1;
            let a = has_fpm(&g);
            let b = fpm_by_subset_condition(&g).unwrap().holds();
            let c = fpm_by_partition(&g).unwrap().is_some();
            if !(a == b && b == c) {
                bad += 1;
            }
        }
    }
    verdict("C3", t, Duration::from_secs(10 * MIN), bad == 0, &format!("{total} graphs on <= 6 vertices, {bad} disagreements"));
}

#[test]
fn c04_blossom_matches_tutte_condition() {
    let t = Instant::now();
    let mut total = 0;
    let mut bad = 0;
    for n in 1..=7 {
        let graphs = all_graphs(n);
        total += graphs.len();
        bad += graphs
            .par_iter()
            .filter(|g| has_perfect_matching(g) != perfect_matching_by_tutte(g).unwrap().holds())
            .count();
    }
    verdict("C4", t, Duration::from_secs(10 * MIN), bad == 0, &format!("{total} graphs on <= 7 vertices, {bad} disagreements"));
}

#[test]
fn c05_sparse_fmp_one() {
    let t = Instant::now();
    let census = fmp_census(7, &Budget::unlimited()).unwrap();
    let exact = s_exact(7, 1, &Budget::unlimited()).unwrap();
    exact.validate().unwrap();
    let mut h2_ok = true;
    for n in (5..=15).step_by(2) {
        let g = h_family(n, 2).unwrap();
        h2_ok &= fmp(&g).unwrap().value == 1 && g.size() == (n + 3) / 2;
    }
    let ok = census.complete
        && census.graphs == 1 << 21
        && census.min_edges(1) == Some(5)
        && exact.value == Some(5)
        && h2_ok;
    verdict(
        "C5",
        t,
        Duration::from_secs(30 * MIN),
        ok,
        &format!(
            "census of {} graphs on 7 vertices: fewest edges with fmp 1 = {:?}, s(7,1) = {:?}; H2(5..15) fmp 1 with (n+3)/2 edges: {h2_ok}",
            census.graphs,
            census.min_edges(1),
            exact.value
        ),
    );
}

#[test]
fn c06_sparse_fmp_two() {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for (which, n) in [(3, 9), (3, 13), (3, 17), (4, 15), (4, 19)] {
        let g = h_family(n, which).unwrap();
        let f = fmp(&g).unwrap().value;
        ok &= f == 2 && g.size() == n + 3;
        parts.push(format!("H{which}({n}): fmp {f}, {} edges", g.size()));
    }
    let search = s2_lowerbound_search(7, &Budget::unlimited(), None).unwrap();
    ok &= search.complete && search.counterexample.is_none();
    parts.push(format!(
        "no fmp-2 graph on 7 vertices with <= 9 edges ({} checked)",
        search.graphs_checked
    ));
    verdict("C6", t, Duration::from_secs(30 * MIN), ok, &parts.join("; "));
}

/// The nine-vertex search takes several minutes on one core.
#[test]
#[ignore = "long-run: cargo test --release --test acceptance -- --ignored"]
fn c06_sparse_fmp_two_nine_vertices() {
    let t = Instant::now();
    let search = s2_lowerbound_search(9, &Budget::unlimited(), None).unwrap();
    verdict(
        "C6-long",
        t,
        Duration::from_secs(3 * 60 * MIN),
        search.complete && search.counterexample.is_none(),
        &format!(
            "no fmp-2 graph on 9 vertices with <= 11 edges ({} checked, counterexample {:?})",
            search.graphs_checked, search.counterexample
        ),
    );
}

#[test]
fn c07_dense_threshold_eight_vertices() {
    let t = Instant::now();
    let mut values = Vec::new();
    let mut ok = true;
    for k in 1..=7 {
        let r = f_verify(8, k, &Budget::unlimited()).unwrap();
        ok &= r.passed() && r.record.value == Some(pair_count(7) + k);
        values.push(r.record.value.unwrap_or(0));
    }
    verdict("C7", t, Duration::from_secs(20 * MIN), ok, &format!("f(8, 1..7) = {values:?}"));
}

#[test]
fn c08_min_degree_thresholds() {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, k) in [(7, 1), (9, 1), (9, 2), (11, 2), (13, 2)] {
        let r = threshold_verify(n, k, &Budget::unlimited()).unwrap();
        ok &= r.passed();
        parts.push(format!("({n},{k}): {} classes", r.graphs_checked));
    }
    verdict("C8", t, Duration::from_secs(30 * MIN), ok, &parts.join(", "));
}

#[test]
fn c09_s_constructions() {
    let t = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, k, case) in [(14, 6, SCase::A), (15, 6, SCase::B), (16, 6, SCase::C), (17, 7, SCase::Odd)] {
        let w = s_witness(n, k).unwrap();
        let f = fmp(&w.graph).unwrap().value;
        ok &= w.case == case && f == k && w.graph.size() == case.edges(n, k);
        parts.push(format!("({n},{k}) case {}: fmp {f}, {} edges", case.name(), w.graph.size()));
    }
    // apex case: the edge count is the claim; the record certifies s(13,6) <= 48
    let w = s_witness(13, 6).unwrap();
    let f = fmp(&w.graph).unwrap().value;
    let rec = s_construction(13, 6).unwrap();
    rec.validate().unwrap();
    ok &= w.case == SCase::Apex && w.graph.size() == 48 && f >= 6 && rec.upper.is_some_and(|u| u <= 48);
    parts.push(format!(
        "(13,6) apex: 48-edge formula met with {} edges, fmp {f}; certified s(13,6) <= {:?}",
        w.graph.size(),
        rec.upper
    ));
    verdict("C9", t, Duration::from_secs(40 * MIN), ok, &parts.join("; "));
}

#[derive(Default)]
struct Tally {
    name: &'static str,
    checked: usize,
    failed: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, ..Default::default() }
    }

    fn check(&mut self, ok: bool) {
        self.checked += 1;
        self.failed += usize::from(!ok);
    }
}

#[test]
fn c10_property_suites() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut spanning = Tally::new("spanning subgraph (1000 pairs)");
    let mut deletion = Tally::new("edge deletion (all edges of 500 graphs)");
    let mut mp_le = Tally::new("even order mp <= fmp");
    let mut mp_eq = Tally::new("even order mp = min degree forces fmp");
    let mut union = Tally::new("disjoint union (500 pairs)");
    let mut degree = Tally::new("min degree below n/2 + fmp");
    let mut degree_even = Tally::new("even order min degree <= n/2 + fmp - 1");
    let mut range = Tally::new("0 <= fmp <= n - 1");
    let mut mp_delta = Tally::new("even order mp <= min degree");
    let mut dirac = Tally::new("Dirac (500)");
    let mut ore = Tally::new("Ore (500)");
    let mut witness = Tally::new("witness revalidation");

    for _ in 0..1000 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let mut h = g.clone();
        for (u, v) in g.edge_list() {
            if rng.gen_bool(0.4) {
                h = h.without_edge(u, v).unwrap();
            }
        }
        spanning.check(fmp(&h).unwrap().value <= fmp(&g).unwrap().value);
    }
    for _ in 0..500 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let f = fmp(&g).unwrap().value;
        for (u, v) in g.edge_list() {
            deletion.check(fmp(&g.without_edge(u, v).unwrap()).unwrap().value + 1 >= f);
        }
        let n2 = rng.gen_range(1..=7);
        let p2 = rng.gen_range(0.2..0.9);
        let g2 = random_graph(&mut rng, n2, p2);
        let want = f.min(fmp(&g2).unwrap().value);
        union.check(fmp(&g.disjoint_union(&g2).unwrap()).unwrap().value == want);
    }

    let mut even_check = |g: &Graph| {
        let f = fmp(g).unwrap().value;
        let m = mp(g).unwrap();
        mp_le.check(m <= f);
        mp_delta.check(m <= g.min_degree());
        if m == g.min_degree() {
            mp_eq.check(f == m);
        }
    };
    for n in [4, 6] {
        all_graphs(n).iter().for_each(&mut even_check);
    }
    for _ in 0..300 {
        let n = if rng.gen_bool(0.5) { 8 } else { 10 };
        let p = rng.gen_range(0.3..0.9);
        even_check(&random_graph(&mut rng, n, p));
    }

    let mut bound_check = |g: &Graph| {
        let n = g.order();
        let r = fmp(g).unwrap();
        let f = r.value;
        range.check(f < n.max(1));
        if let Some(w) = &r.witness {
            witness.check(w.validate(g).is_ok() && w.cost() == f);
            if n >= 3 {
                degree.check(2 * g.min_degree() < n + 2 * f);
                if n % 2 == 0 {
                    degree_even.check(2 * g.min_degree() + 2 <= n + 2 * f);
                }
            }
        }
    };
    for n in 1..=6 {
        all_graphs(n).iter().for_each(&mut bound_check);
    }
    for _ in 0..1000 {
        let n = rng.gen_range(3..=12);
        let p = rng.gen_range(0.2..0.95);
        bound_check(&random_graph(&mut rng, n, p));
    }

    for _ in 0..500 {
        let n = rng.gen_range(3..=14);
        let p = rng.gen_range(0.0..0.6);
        let g = random_graph(&mut rng, n, p);
        let g = raise_min_degree(&mut rng, g, n.div_ceil(2));
        assert!(2 * g.min_degree() >= n);
        dirac.check(is_hamiltonian(&g).unwrap());
    }
    for _ in 0..500 {
        let n = rng.gen_range(3..=14);
        let p = rng.gen_range(0.1..0.6);
        let g = random_graph(&mut rng, n, p);
        let g = make_ore(&mut rng, g);
        assert!(is_ore(&g));
        ore.check(is_hamiltonian(&g).unwrap());
    }

    let tallies = [
        spanning, deletion, mp_le, mp_eq, union, degree, degree_even, range, mp_delta, dirac, ore, witness,
    ];
    let ok = tallies.iter().all(|t| t.failed == 0 && t.checked > 0);
    let detail = tallies
        .iter()
        .map(|t| format!("{}: {}/{}", t.name, t.checked - t.failed, t.checked))
        .collect::<Vec<_>>()
        .join("; ");
    verdict("C10", t, Duration::from_secs(10 * MIN), ok, &detail);
}

/// The sharper degree bound fails for odd order; this pins the smallest
/// counterexample so the weaker form above stays deliberate.
#[test]
fn odd_order_degree_bound_counterexample() {
    let k3 = named::complete(3);
    let f = fmp(&k3).unwrap().value;
    assert_eq!((f, k3.min_degree()), (1, 2));
    assert!(2 * k3.min_degree() + 2 > 3 + 2 * f);
    assert_eq!(graph6_encode(&k3), "Bw");
}

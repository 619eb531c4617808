mod common;

use fmplab::graph::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode, pair_count, VertexSet};
use fmplab::matching::{
    decide_fpm, fractional_matching_number, has_fpm, has_perfect_matching, is_hamiltonian, max_matching,
    FpmCertificate, FpmDecision,
};
use fmplab::preclusion::{classify_fmp01, fmp, fmp_at_most, mp, CertificateForm};
use fmplab::report;
use fmplab::Graph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Graph on `lo..=hi` vertices, each pair present independently.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn keep_edges(g: &Graph, keep: &[bool]) -> Graph {
    let mut h = g.clone();
    for ((u, v), &k) in g.edge_list().into_iter().zip(keep.iter().cycle()) {
        if !k {
            h = h.without_edge(u, v).unwrap();
        }
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph(0, 20)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g.clone());
        prop_assert_eq!(edge_list_decode(&edge_list_encode(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(0, 16)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.size() + c.size(), pair_count(g.order()));
    }

    #[test]
    fn vertex_deletion_counts_are_bounded(g in graph(1, 12), mask in any::<u64>()) {
        let n = g.order();
        let s = VertexSet::from_mask(n, mask & ((1u64 << n) - 1)).unwrap();
        prop_assert!(g.isolated_count(&s).unwrap() <= n - s.len());
        prop_assert!(g.odd_component_count(&s).unwrap() <= n - s.len());
    }

    #[test]
    fn spanning_subgraph_does_not_raise_fmp(g in graph(1, 10), keep in proptest::collection::vec(any::<bool>(), 1..40)) {
        let h = keep_edges(&g, &keep);
        prop_assert!(fmp(&h).unwrap().value <= fmp(&g).unwrap().value);
    }

    #[test]
    fn disjoint_union_takes_the_minimum(a in graph(1, 7), b in graph(1, 7)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(u.size(), a.size() + b.size());
        prop_assert_eq!(u.components().len(), a.components().len() + b.components().len());
        let want = fmp(&a).unwrap().value.min(fmp(&b).unwrap().value);
        prop_assert_eq!(fmp(&u).unwrap().value, want);
    }

    #[test]
    fn fmp_bounds_and_witness(g in graph(1, 12)) {
        let n = g.order();
        let r = fmp(&g).unwrap();
        prop_assert!(r.value < n.max(1));
        match &r.witness {
            Some(w) => {
                w.validate(&g).unwrap();
                prop_assert_eq!(w.cost(), r.value);
                prop_assert!(r.value <= g.min_degree());
                prop_assert!(fmp_at_most(&g, r.value).unwrap());
                prop_assert!(r.value == 0 || !fmp_at_most(&g, r.value - 1).unwrap());
                if n >= 3 {
                    prop_assert!(2 * g.min_degree() < n + 2 * r.value);
                }
                if n % 2 == 0 {
                    prop_assert!(2 * g.min_degree() + 2 <= n + 2 * r.value);
                }
            }
            None => {
                prop_assert_eq!(r.value, 0);
                prop_assert!(!has_fpm(&g));
            }
        }
    }

    #[test]
    fn fractional_matching_number_bounds(g in graph(0, 14)) {
        let n = g.order();
        let halves = fractional_matching_number(&g).halves() as usize;
        prop_assert!(2 * max_matching(&g).size() <= halves);
        prop_assert!(halves <= n);
        prop_assert_eq!(halves == n, has_fpm(&g));
        if has_perfect_matching(&g) {
            prop_assert!(has_fpm(&g));
        }
    }

    #[test]
    fn certificates_revalidate(g in graph(1, 12)) {
        let json = match decide_fpm(&g) {
            FpmDecision::Perfect(f) => {
                f.validate(&g).unwrap();
                prop_assert!(f.is_perfect());
                serde_json::json!({"fpm": true, "certificate": report::certificate_json(&FpmCertificate::Matching(f))})
            }
            FpmDecision::Deficient(w) => {
                let w = w.unwrap();
                w.validate(&g).unwrap();
                serde_json::json!({"fpm": false, "certificate": report::no_fpm_json(&w)})
            }
        };
        report::validate_report(&g, &json).unwrap();
        let c = classify_fmp01(&g, CertificateForm::Matching).unwrap();
        c.validate(&g).unwrap();
        report::validate_report(&g, &report::fmp01_json(&c)).unwrap();
        report::validate_report(&g, &report::fmp_json(&fmp(&g).unwrap())).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn deleting_an_edge_lowers_fmp_by_at_most_one(g in graph(2, 9)) {
        let f = fmp(&g).unwrap().value;
        for (u, v) in g.edge_list() {
            prop_assert!(fmp(&g.without_edge(u, v).unwrap()).unwrap().value + 1 >= f);
        }
    }

    #[test]
    fn even_order_mp_below_fmp(g in graph(2, 5).prop_map(|g| {
        // double the order so it is even
        g.disjoint_union(&g).unwrap()
    })) {
        let f = fmp(&g).unwrap().value;
        let m = mp(&g).unwrap();
        prop_assert!(m <= f);
        prop_assert!(m <= g.min_degree());
        if m == g.min_degree() {
            prop_assert_eq!(f, m);
        }
    }

    #[test]
    fn even_order_mp_on_eight_and_ten(seed in any::<u64>(), big in any::<bool>(), p in 0.3f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, if big { 10 } else { 8 }, p);
        let f = fmp(&g).unwrap().value;
        let m = mp(&g).unwrap();
        prop_assert!(m <= f && m <= g.min_degree());
        if m == g.min_degree() {
            prop_assert_eq!(f, m);
        }
    }

    #[test]
    fn dirac(seed in any::<u64>(), n in 3usize..=14, p in 0.0f64..0.6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, p);
        let g = common::raise_min_degree(&mut rng, g, n.div_ceil(2));
        prop_assert!(is_hamiltonian(&g).unwrap());
    }

    #[test]
    fn ore(seed in any::<u64>(), n in 3usize..=14, p in 0.1f64..0.6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, p);
        let g = common::make_ore(&mut rng, g);
        prop_assert!(common::is_ore(&g));
        prop_assert!(is_hamiltonian(&g).unwrap());
    }
}

/// `mu_f = (n - max_S (i(G - S) - |S|)) / 2`, by subset enumeration.
fn mu_f_by_subsets(g: &Graph) -> usize {
    let n = g.order();
    let worst = (0..1u64 << n)
        .map(|s| g.isolated_count_mask(s) as i64 - s.count_ones() as i64)
        .max()
        .unwrap();
    (n as i64 - worst.max(0)) as usize
}

#[test]
fn fractional_matching_number_by_subsets() {
    for n in 0..=6 {
        for g in fmplab::graph::EnumOptions::new(n).iter().unwrap() {
            assert_eq!(fractional_matching_number(&g).halves() as usize, mu_f_by_subsets(&g), "{}", graph6_encode(&g));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let g = common::random_graph(&mut rng, 8, 0.3);
        assert_eq!(fractional_matching_number(&g).halves() as usize, mu_f_by_subsets(&g));
    }
}

#[test]
fn even_order_mp_below_fmp_exhaustive() {
    for n in [4, 6] {
        for g in fmplab::graph::EnumOptions::new(n).iter().unwrap() {
            let f = fmp(&g).unwrap().value;
            let m = mp(&g).unwrap();
            assert!(m <= f, "{}", graph6_encode(&g));
            if m == g.min_degree() {
                assert_eq!(f, m, "{}", graph6_encode(&g));
            }
        }
    }
}

#[test]
fn degree_bound_exhaustive() {
    for n in 3..=6 {
        for g in fmplab::graph::EnumOptions::new(n).iter().unwrap() {
            let r = fmp(&g).unwrap();
            if r.witness.is_some() {
                assert!(2 * g.min_degree() < n + 2 * r.value, "{}", graph6_encode(&g));
            }
        }
    }
}

//! The named graph families and the sparse constructions.
//!
//! cargo run --release --example families

use fmplab::families::{h_family, one_factorization, regular_factorizable, s_witness, FamilySpec};
use fmplab::graph::graph6_encode;
use fmplab::preclusion::fmp;

fn main() -> fmplab::Result<()> {
    let factors = one_factorization(6)?;
    println!("K6 splits into {} perfect matchings, first {:?}", factors.len(), factors[0]);
    let rf = regular_factorizable(10, 4)?;
    println!("4-regular graph on 10 vertices from {} factors: {}", rf.factors.len(), graph6_encode(&rf.graph));

    for (n, k) in [(14, 6), (15, 6), (16, 6), (17, 7), (13, 6)] {
        let w = s_witness(n, k)?;
        println!(
            "s-construction ({n}, {k}) case {:5}: {} edges (formula {}), fmp {}",
            w.case.name(),
            w.graph.size(),
            w.case.edges(n, k),
            fmp(&w.graph)?.value
        );
    }

    for (which, n) in [(2, 9), (3, 9), (3, 13), (4, 15)] {
        let g = h_family(n, which)?;
        println!("H{which}({n}): {} edges, fmp {}", g.size(), fmp(&g)?.value);
    }

    for text in ["complete:7", "clique_union:3,4", "f_lower_witness:8,3", "bowtie"] {
        let spec: FamilySpec = text.parse()?;
        let g = spec.build()?;
        println!("{spec}: {} vertices, {} edges, {}", g.order(), g.size(), graph6_encode(&g));
    }
    Ok(())
}

//! Dense side: the edge count forcing fmp >= k, and min-degree thresholds.
//!
//! cargo run --release --example dense_verification

use fmplab::extremal::{f_verify, threshold_verify, Budget};

fn main() -> fmplab::Result<()> {
    let budget = Budget::seconds(600.0);
    for k in 1..=7 {
        let r = f_verify(8, k, &budget)?;
        println!(
            "f(8, {k}) = {:?}  ({} complements, witness connected: {}) {}",
            r.record.value,
            r.complements_checked,
            r.witness_connected,
            if r.passed() { "ok" } else { "FAILED" }
        );
    }
    for (n, k) in [(7, 1), (9, 1), (9, 2), (11, 2), (13, 2), (10, 1), (14, 2)] {
        let r = threshold_verify(n, k, &budget)?;
        println!(
            "min degree >= {} on {n} vertices: {} classes ({:?}), fmp = min degree everywhere: {}",
            n - k,
            r.graphs_checked,
            r.enumeration,
            r.passed()
        );
    }
    Ok(())
}

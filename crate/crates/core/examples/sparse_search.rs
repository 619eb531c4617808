//! Exhaustive sparse search with a time budget and checkpoint/resume.
//!
//! cargo run --release --example sparse_search -- [n] [seconds-per-slice]

use fmplab::extremal::{s2_lowerbound_search, s2_record, s_exact, Budget, Checkpoint};

fn main() -> fmplab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(7), |a| a.parse()).expect("n");
    let mut slice: f64 = args.next().map_or(Ok(0.2), |a| a.parse()).expect("seconds");

    let mut resume: Option<Checkpoint> = None;
    let mut checked = 0;
    loop {
        let r = s2_lowerbound_search(n, &Budget::seconds(slice), resume.take())?;
        checked += r.graphs_checked;
        // the checkpoint is plain JSON and can be written to disk between runs
        let saved = serde_json::to_string(&r.checkpoint).expect("serialisable");
        println!("slice: {} graphs, {} units done", r.graphs_checked, r.checkpoint.done.len());
        if let Some(g) = &r.counterexample {
            println!("found a graph with fmp 2 and at most {} edges: {g}", r.max_edges);
            return Ok(());
        }
        if r.complete {
            println!("{checked} graphs: none with fmp 2 and at most {} edges", r.max_edges);
            // the bowtie constructions start at nine vertices; below that search directly
            let rec = if n <= 7 { s_exact(n, 2, &Budget::unlimited())? } else { s2_record(n, &r)? };
            println!("s({n}, 2): {:?} ({:?})", rec.best(), rec.status);
            return Ok(());
        }
        if r.graphs_checked == 0 {
            // a unit longer than the slice never finishes; give it more time
            slice *= 2.0;
        }
        resume = Some(serde_json::from_str(&saved).expect("round trip"));
    }
}

//! Tables of s(n, k) and g(n, k) as CSV, with records that recheck on load.
//!
//! cargo run --release --example extremal_tables

use fmplab::extremal::{fmp_census, g_from_s, read_csv, s_record, write_csv, Budget, ExtremalFn};

fn main() -> fmplab::Result<()> {
    let budget = Budget::seconds(60.0);
    let census = fmp_census(6, &budget)?;
    println!("all {} labelled graphs on 6 vertices:", census.graphs);
    for row in &census.rows {
        println!("  fmp {}: {:5} graphs, fewest edges {} ({})", row.fmp, row.graphs, row.min_edges, row.first_graph6);
    }

    let mut s = Vec::new();
    for (n, k) in [(5, 1), (7, 1), (6, 2), (7, 2), (9, 1), (9, 2), (14, 6), (13, 6)] {
        s.push(s_record(n, k, &budget)?);
    }
    let mut csv = Vec::new();
    write_csv(&s, &mut csv)?;
    println!("\ns(n, k):\n{}", String::from_utf8_lossy(&csv));

    let back = read_csv(&csv[..], ExtremalFn::S)?;
    assert_eq!(back.len(), s.len());

    let g: Vec<_> = s.iter().filter(|r| r.k >= 1).map(g_from_s).collect::<fmplab::Result<_>>()?;
    let mut csv = Vec::new();
    write_csv(&g, &mut csv)?;
    println!("g(n, k) = s(n, k + 1) - 1:\n{}", String::from_utf8_lossy(&csv));
    Ok(())
}

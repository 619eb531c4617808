//! Reading and writing graphs, and enumerating small ones.
//!
//! cargo run --example graph_io

use fmplab::graph::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode, named, EnumOptions};

fn main() -> fmplab::Result<()> {
    let p = named::petersen();
    let g6 = graph6_encode(&p);
    println!("Petersen graph6: {g6}");
    assert_eq!(graph6_decode(&g6)?, p);

    let text = edge_list_encode(&named::cycle(5));
    print!("C5 as an edge list:\n{text}");
    let c5 = edge_list_decode(&text)?;
    println!("degrees {:?}, connected {}", c5.degree_sequence(), c5.is_connected());

    // a malformed string reports where it went wrong
    if let Err(e) = graph6_decode("D?") {
        println!("bad input: {e}");
    }

    let all = EnumOptions::new(5).count()?;
    let cubic_free = EnumOptions::new(5).max_degree(2).count()?;
    let min2 = EnumOptions::new(6).min_degree(2).exact_edges(6).count()?;
    println!("labelled graphs on 5 vertices: {all}");
    println!("  with max degree <= 2: {cubic_free}");
    println!("6-vertex, 6-edge graphs with min degree 2: {min2}");

    let mut keys: Vec<_> = EnumOptions::new(4).iter()?.map(|g| g.invariant_key()).collect();
    keys.sort();
    keys.dedup();
    println!("distinct invariant keys on 4 vertices: {}", keys.len());
    Ok(())
}

//! Matchings, fractional matchings and their certificates.
//!
//! cargo run --example matchings

use fmplab::graph::{graph6_encode, named};
use fmplab::matching::{
    decide_fpm, fpm_by_partition, fpm_by_subset_condition, fractional_matching_number, hamiltonian_cycle,
    max_matching, perfect_matching_by_tutte, FpmDecision,
};
use fmplab::Graph;

fn show(name: &str, g: &Graph) -> fmplab::Result<()> {
    let m = max_matching(g);
    let (num, den) = fractional_matching_number(g).as_fraction();
    println!("{name} ({}): matching {}, mu_f {num}/{den}", graph6_encode(g), m.size());
    println!("  tutte condition holds: {}", perfect_matching_by_tutte(g)?.holds());
    match decide_fpm(g) {
        FpmDecision::Perfect(f) => {
            f.validate(g)?;
            println!("  fractional perfect matching: {:?}", f.entries());
            for block in f.to_partition() {
                println!("    block {:?} cycle {:?}", block.vertices, block.cycle);
            }
        }
        FpmDecision::Deficient(Some(w)) => {
            w.validate(g)?;
            println!("  none; deleting {:?} isolates too many vertices", w.s.to_vec());
        }
        FpmDecision::Deficient(None) => println!("  none"),
    }
    println!("  subset oracle agrees: {}", fpm_by_subset_condition(g)?.holds() == decide_fpm(g).has_fpm());
    if g.order() <= 12 {
        println!("  partition search finds one: {}", fpm_by_partition(g)?.is_some());
    }
    println!("  hamiltonian cycle: {:?}", hamiltonian_cycle(g)?);
    Ok(())
}

fn main() -> fmplab::Result<()> {
    show("C5", &named::cycle(5))?;
    show("K2 + C5", &named::complete(2).disjoint_union(&named::cycle(5))?)?;
    show("star K1,3", &named::star(3))?;
    show("Petersen", &named::petersen())?;
    Ok(())
}

//! Fractional matching preclusion: exact values, witnesses, oracles.
//!
//! cargo run --release --example compute_fmp

use std::time::Instant;

use fmplab::graph::named;
use fmplab::preclusion::{classify_fmp01, fmp, fmp_at_most, fmp_bruteforce, fmp_with, mp, CertificateForm, SearchOptions};
use fmplab::report;

fn main() -> fmplab::Result<()> {
    for n in 3..=11 {
        let g = named::complete(n);
        let t = Instant::now();
        let r = fmp(&g)?;
        let w = r.witness.as_ref().expect("complete graphs have an FPM");
        w.validate(&g)?;
        println!(
            "fmp(K{n}) = {:2}  S = {:?}  I = {:?}  ({:.1?})",
            r.value,
            w.s.to_vec(),
            w.i.to_vec(),
            t.elapsed()
        );
    }

    let p = named::petersen();
    let exact = fmp(&p)?.value;
    let oracle = fmp_bruteforce(&p, 3)?.expect("value is at most 3").value;
    println!("Petersen: fmp {exact}, edge-subset oracle {oracle}, mp {}", mp(&p)?);
    println!("Petersen fmp <= 2? {}", fmp_at_most(&p, 2)?);

    let par = fmp_with(&named::complete(12), &SearchOptions::default().parallel(true))?;
    println!("parallel search on K12: {}", par.value);

    let bowtie = fmplab::families::bowtie();
    let class = classify_fmp01(&bowtie, CertificateForm::Matching)?;
    class.validate(&bowtie)?;
    println!("bowtie fmp class: {}", class.value_class());
    println!("as JSON: {}", report::fmp_json(&fmp(&bowtie)?));
    Ok(())
}

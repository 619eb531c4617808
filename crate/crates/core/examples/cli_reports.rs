//! Driving the command line in-process and rechecking its certificates.
//!
//! cargo run --release --example cli_reports

use fmplab::cli;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("fmplab").chain(args.iter().copied()), &mut out, &mut err);
    let mut text = String::from_utf8(out).expect("utf-8");
    text.push_str(&String::from_utf8(err).expect("utf-8"));
    (code, text)
}

fn main() {
    let (_, report) = call(&["compute", "--family", "h3", "--params", "9", "--what", "fmp01"]);
    println!("{report}");
    let path = std::env::temp_dir().join("fmplab-example-report.json");
    std::fs::write(&path, &report).expect("write report");
    let (code, verdict) = call(&["compute", "--validate", path.to_str().expect("utf-8 path")]);
    println!("revalidated (exit {code}): {verdict}");

    for args in [
        &["compute", "--graph6", "Bw", "--what", "mu-f", "--format", "text"][..],
        &["verify", "complete-graphs", "--n", "7..9", "--format", "text"],
        &["table", "s", "--n", "5,7", "--k", "1"],
        &["verify", "s-two", "--n", "9", "--budget-seconds", "0.5", "--summary", "--format", "text"],
    ] {
        let (code, text) = call(args);
        println!("$ fmplab {}  [exit {code}]\n{text}", args.join(" "));
    }
}

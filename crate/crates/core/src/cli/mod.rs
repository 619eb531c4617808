//! `fmplab` command line: `compute`, `gen`, `verify`, `table`.
//!
//! Exit codes: 0 pass, 1 violated, 2 inconclusive (budget), 3 usage error.

mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extremal::{f_verify, g_record, s_record, write_csv, Budget, ExtremalFn, ExtremalRecord, Status};
use crate::families::FamilySpec;
use crate::graph::{edge_list_decode, edge_list_encode, graph6_decode, graph6_encode, Graph};
use crate::matching::{
    decide_fpm, fpm_by_partition, fractional_matching_number, hamiltonian_cycle, FpmCertificate, FpmDecision,
};
use crate::preclusion::{classify_fmp01, fmp_bruteforce, fmp_with, mp, CertificateForm, SearchOptions};
use crate::report;

pub use suites::Suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fmplab", version, about = "Fractional matching preclusion toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Wall-clock budget for the whole command.
    #[arg(long, global = true, env = "FMPLAB_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct Input {
    /// Graph in graph6 form.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: header `n m`, then one `u v` pair per line.
    #[arg(long, value_name = "FILE")]
    edges: Option<std::path::PathBuf>,
    /// Named family member, with `--params`.
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
}

#[derive(Args, Debug)]
struct FamilyParams {
    /// Comma-separated family parameters.
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Fmp,
    Mp,
    MuF,
    Fpm,
    Hamiltonian,
    Fmp01,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CertKind {
    Matching,
    Partition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an invariant of one graph, with a certificate where one exists.
    Compute {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        family: FamilyParams,
        #[arg(long, value_enum, default_value = "fmp")]
        what: What,
        /// Use the edge-subset oracle for `fmp` instead of the search.
        #[arg(long)]
        oracle: bool,
        /// Largest deletion set the oracle tries; defaults to the minimum degree.
        #[arg(long)]
        max_subset_size: Option<usize>,
        #[arg(long, value_enum, default_value = "matching")]
        certificate: CertKind,
        /// Recheck a JSON report written by an earlier `compute`.
        #[arg(long, value_name = "FILE")]
        validate: Option<std::path::PathBuf>,
    },
    /// Build a member of a named family.
    Gen {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        family: FamilyParams,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Orders: `7`, `7,9`, or an inclusive range `7..10`.
        #[arg(long)]
        n: Option<String>,
        /// Values of k, same syntax as `--n`.
        #[arg(long)]
        k: Option<String>,
        /// Sample count for randomised suites.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print only the summary, not every checked instance.
        #[arg(long)]
        summary: bool,
    },
    /// Tabulate an extremal function.
    Table {
        #[arg(value_enum)]
        function: TableFn,
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFn {
    S,
    F,
    G,
}

/// Parse `7`, `7,9,11`, `7..10` (inclusive) or a mix like `3,5..7`.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("not a number: {s:?}")))
        };
        if let Some((a, b)) = part.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(Error::invalid(format!("empty range {part}")));
            }
            out.extend(a..=b);
        } else {
            out.push(num(part)?);
        }
    }
    if out.is_empty() {
        return Err(Error::invalid("empty list"));
    }
    Ok(out)
}

fn read_graph(input: &Input, family: &FamilyParams) -> Result<Option<Graph>> {
    if let Some(s) = &input.graph6 {
        return graph6_decode(s.trim()).map(Some);
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return edge_list_decode(&text).map(Some);
    }
    if let Some(name) = &input.family {
        return FamilySpec::parse(name, &family.params)?.build().map(Some);
    }
    if !family.params.is_empty() {
        return Err(Error::invalid("--params needs --family"));
    }
    Ok(None)
}

/// Result of one command before formatting.
struct Outcome {
    code: i32,
    json: Value,
    text: String,
    csv: String,
}

impl Outcome {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&self.json).expect("serialisable");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
        }
    }
}

fn budget_of(g: &Global) -> Result<Budget> {
    match g.budget_seconds {
        None => Ok(Budget::unlimited()),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Budget::seconds(s)),
        Some(s) => Err(Error::invalid(format!("budget must be positive, got {s}"))),
    }
}

fn search_options(budget: &Budget, workers: usize) -> SearchOptions {
    let opts = SearchOptions::default().parallel(workers > 1);
    match budget.remaining() {
        Some(d) => opts.budget(d),
        None => opts,
    }
}

fn kv_text(pairs: &[(&str, String)]) -> (String, String) {
    let text: String = pairs.iter().map(|(k, v)| format!("{k} {v}\n")).collect();
    let mut csv = String::new();
    csv.push_str(&pairs.iter().map(|p| p.0).collect::<Vec<_>>().join(","));
    csv.push('\n');
    csv.push_str(&pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>().join(","));
    csv.push('\n');
    (text, csv)
}

fn vertices(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn compute(g: &Graph, what: What, oracle: bool, max_subset: Option<usize>, cert: CertKind, budget: &Budget, workers: usize) -> Result<Outcome> {
    let g6 = graph6_encode(g);
    let mut json = match what {
        What::Fmp if oracle => {
            let k_max = max_subset.unwrap_or_else(|| g.min_degree());
            match fmp_bruteforce(g, k_max)? {
                Some(r) => report::fmp_json(&r),
                None => {
                    return Ok(Outcome {
                        code: EXIT_INCONCLUSIVE,
                        json: json!({"graph6": g6, "fmp": null, "exceeds": k_max, "method": "oracle"}),
                        text: format!("fmp >{k_max}\n"),
                        csv: format!("fmp\n>{k_max}\n"),
                    })
                }
            }
        }
        What::Fmp => report::fmp_json(&fmp_with(g, &search_options(budget, workers))?),
        What::Mp => json!({"mp": mp(g)?}),
        What::MuF => {
            let m = fractional_matching_number(g);
            let (num, den) = m.as_fraction();
            let shown = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
            json!({"mu_f": shown, "halves": m.halves()})
        }
        What::Fpm => match cert {
            CertKind::Matching => match decide_fpm(g) {
                FpmDecision::Perfect(f) => {
                    json!({"fpm": true, "certificate": report::certificate_json(&FpmCertificate::Matching(f))})
                }
                FpmDecision::Deficient(w) => {
                    json!({"fpm": false, "certificate": w.as_ref().map(report::no_fpm_json)})
                }
            },
            CertKind::Partition => match fpm_by_partition(g)? {
                Some(blocks) => {
                    json!({"fpm": true, "certificate": report::certificate_json(&FpmCertificate::Partition(blocks))})
                }
                None => match decide_fpm(g) {
                    FpmDecision::Deficient(w) => {
                        json!({"fpm": false, "certificate": w.as_ref().map(report::no_fpm_json)})
                    }
                    FpmDecision::Perfect(_) => {
                        return Err(Error::invalid("partition search and matching search disagree"))
                    }
                },
            },
        },
        What::Hamiltonian => {
            let c = hamiltonian_cycle(g)?;
            json!({"hamiltonian": c.is_some(), "cycle": c})
        }
        What::Fmp01 => {
            let form = match cert {
                CertKind::Matching => CertificateForm::Matching,
                CertKind::Partition => CertificateForm::Partition,
            };
            report::fmp01_json(&classify_fmp01(g, form)?)
        }
    };
    json["graph6"] = json!(g6);
    let pairs: Vec<(&str, String)> = match what {
        What::Fmp => {
            let mut p = vec![("fmp", json["fmp"].to_string())];
            if let Some(w) = json["witness"].as_object() {
                for key in ["S", "I"] {
                    let list: Vec<usize> = serde_json::from_value(w[key].clone()).expect("list");
                    p.push((key, vertices(&list)));
                }
            }
            p
        }
        What::Mp => vec![("mp", json["mp"].to_string())],
        What::MuF => vec![("mu_f", json["mu_f"].as_str().unwrap_or_default().to_string())],
        What::Fpm => vec![("fpm", json["fpm"].to_string())],
        What::Hamiltonian => {
            let mut p = vec![("hamiltonian", json["hamiltonian"].to_string())];
            if let Ok(c) = serde_json::from_value::<Vec<usize>>(json["cycle"].clone()) {
                p.push(("cycle", vertices(&c)));
            }
            p
        }
        What::Fmp01 => vec![("class", json["class"].as_str().unwrap_or_default().to_string())],
    };
    let (text, csv) = kv_text(&pairs);
    Ok(Outcome {
        code: EXIT_PASS,
        json,
        text,
        csv,
    })
}

fn validate_file(g: Option<Graph>, path: &std::path::Path) -> Result<Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
    let g = match g {
        Some(g) => g,
        None => graph6_decode(
            v.get("graph6")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::invalid("report has no graph6 field and no graph was given"))?,
        )?,
    };
    let (code, json) = match report::validate_report(&g, &v) {
        Ok(()) => (EXIT_PASS, json!({"valid": true})),
        Err(e) => (EXIT_VIOLATED, json!({"valid": false, "reason": e.to_string()})),
    };
    let line = if code == EXIT_PASS { "valid\n".to_string() } else { format!("invalid {}\n", json["reason"].as_str().unwrap_or_default()) };
    Ok(Outcome {
        code,
        json,
        csv: format!("valid\n{}\n", code == EXIT_PASS),
        text: line,
    })
}

fn table(function: TableFn, ns: &[usize], ks: &[usize], budget: &Budget) -> Result<Outcome> {
    let mut records: Vec<ExtremalRecord> = Vec::new();
    let mut code = EXIT_PASS;
    for &n in ns {
        for &k in ks {
            let rec = match function {
                TableFn::S => s_record(n, k, budget),
                TableFn::G => g_record(n, k, budget),
                TableFn::F => f_verify(n, k, budget).map(|r| {
                    if r.violation.is_some() || !r.witness_fmp_below_k {
                        code = EXIT_VIOLATED;
                    }
                    r.record
                }),
            };
            let rec = match rec {
                Err(Error::BudgetExhausted(_)) => {
                    if code == EXIT_PASS {
                        code = EXIT_INCONCLUSIVE;
                    }
                    continue;
                }
                r => r?,
            };
            rec.validate()?;
            if rec.status == Status::Bounds && code == EXIT_PASS {
                code = EXIT_INCONCLUSIVE;
            }
            records.push(rec);
        }
    }
    let mut buf = Vec::new();
    write_csv(&records, &mut buf)?;
    let csv = String::from_utf8(buf).expect("csv output is utf-8");
    let fname = match function {
        TableFn::S => ExtremalFn::S,
        TableFn::F => ExtremalFn::F,
        TableFn::G => ExtremalFn::G,
    };
    let text = records
        .iter()
        .map(|r| {
            let shown = match (r.value, r.lower, r.upper) {
                (Some(v), _, _) => v.to_string(),
                (None, lo, hi) => format!(
                    "[{}, {}]",
                    lo.map_or("?".into(), |x| x.to_string()),
                    hi.map_or("?".into(), |x| x.to_string())
                ),
            };
            format!("{fname}({}, {}) = {shown}\n", r.n, r.k)
        })
        .collect();
    Ok(Outcome {
        code,
        json: serde_json::to_value(&records).expect("serialisable"),
        text,
        csv,
    })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cli: Cli, budget: Budget, workers: usize) -> Result<(Outcome, Format)> {
    let fmt = cli.global.format;
    Ok(match cli.command {
        Command::Compute {
            input,
            family,
            what,
            oracle,
            max_subset_size,
            certificate,
            validate,
        } => {
            let g = read_graph(&input, &family)?;
            if let Some(path) = validate {
                (validate_file(g, &path)?, fmt.unwrap_or(Format::Json))
            } else {
                let g = g.ok_or_else(|| Error::invalid("give one of --graph6, --edges or --family"))?;
                if oracle && what != What::Fmp {
                    return Err(Error::invalid("--oracle applies to --what fmp"));
                }
                (
                    compute(&g, what, oracle, max_subset_size, certificate, &budget, workers)?,
                    fmt.unwrap_or(Format::Json),
                )
            }
        }
        Command::Gen { input, family, emit } => {
            if input.graph6.is_some() || input.edges.is_some() {
                return Err(Error::invalid("gen takes --family and --params"));
            }
            let g = read_graph(&input, &family)?.ok_or_else(|| Error::invalid("gen needs --family"))?;
            let g6 = graph6_encode(&g);
            let edges = edge_list_encode(&g);
            let text = match emit {
                Emit::Graph6 => format!("{g6}\n"),
                Emit::Edges => edges.clone(),
            };
            let csv = std::iter::once("u,v\n".to_string())
                .chain(g.edges().map(|(u, v)| format!("{u},{v}\n")))
                .collect();
            let json = json!({
                "family": input.family,
                "params": family.params,
                "n": g.order(),
                "m": g.size(),
                "graph6": g6,
                "edges": g.edge_list().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            });
            (
                Outcome {
                    code: EXIT_PASS,
                    json,
                    text,
                    csv,
                },
                fmt.unwrap_or(Format::Text),
            )
        }
        Command::Verify {
            suite,
            n,
            k,
            samples,
            seed,
            summary,
        } => {
            let ns = n.as_deref().map(parse_list).transpose()?;
            let ks = k.as_deref().map(parse_list).transpose()?;
            let params = suites::Params {
                n: ns,
                k: ks,
                samples,
                seed,
                workers,
            };
            let rep = suites::run(suite, &params, &budget)?;
            let code = rep.exit_code();
            let mut json = serde_json::to_value(&rep).expect("serialisable");
            if summary {
                json.as_object_mut().expect("object").remove("checks");
            }
            let text = rep.text(summary);
            let csv = rep.csv();
            (Outcome { code, json, text, csv }, fmt.unwrap_or(Format::Json))
        }
        Command::Table { function, n, k } => (
            table(function, &parse_list(&n)?, &parse_list(&k)?, &budget)?,
            fmt.unwrap_or(Format::Csv),
        ),
    })
}

/// Run the command line `args` (program name first). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let shown = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(shown.as_bytes()) } else { out.write_all(shown.as_bytes()) };
            return code;
        }
    };
    let budget = match budget_of(&cli.global) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let workers = cli.global.workers.unwrap_or(1);
    if workers == 0 {
        let _ = writeln!(err, "error: --workers must be at least 1");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(cli, budget, workers)) {
        Ok((outcome, format)) => {
            if out.write_all(outcome.render(format).as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

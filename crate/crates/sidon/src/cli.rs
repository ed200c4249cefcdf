//! Command-line front end: reproducible runs with machine-readable output.
//!
//! Every invocation produces a RunRecord {command, parameters, result,
//! version, elapsed_ms}; the result payload embeds its provenance (the
//! construction parameters actually used, or the search budget). Commands
//! whose natural product is a table (search table, bounds sigma, tables
//! reproduce) print CSV to stdout when no --out is given; everything else
//! prints the RunRecord as JSON. `--out file.csv` routes the CSV to the
//! file with the RunRecord on stdout; `--out file.json` writes the record
//! itself.
//!
//! Exit codes: 0 success, 1 failed verification or table mismatch,
//! 2 malformed arguments, 3 domain errors (the payload carries the error
//! name).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{self, SigmaBound};
use crate::construct;
use crate::error::{Error, Result};
use crate::field::{self, FieldCtx, Poly};
use crate::search::{self, Problem, SearchCertificate, DEFAULT_BUDGET};
use crate::sets::{AnySet, CyclicSet, IntegerSet};
use crate::tables;

#[derive(Parser)]
#[command(
    name = "sidon",
    version,
    about = "Construct, verify, search, and bound B2[g] sets",
    disable_help_subcommand = true
)]
struct Cli {
    /// Write output to a file: .csv takes the tabular rows, .json the run record
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Node-expansion budget for searches; accepts scientific notation like 1e8
    #[arg(long, global = true, value_name = "N", value_parser = parse_budget)]
    budget: Option<u64>,

    /// Worker threads for table fan-out (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a set with one of the finite-field or block constructions
    Construct {
        #[command(subcommand)]
        which: ConstructCmd,
    },
    /// Check a set against a g-value bound; exits 1 when it fails
    Verify(VerifyArgs),
    /// Branch-and-bound searches for extremal sets
    Search {
        #[command(subcommand)]
        which: SearchCmd,
    },
    /// Closed-form upper bounds and density lower bounds
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
    /// Merge two sets: modulus-coprime CRT or gap interleaving
    Combine(CombineArgs),
    /// Recompute the embedded reference tables and diff them
    Tables {
        #[command(subcommand)]
        which: TablesCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Union of Ruzsa components mod p(p-1) for indices K
    Ruzsa {
        /// Prime modulus of the underlying field
        #[arg(long)]
        p: u64,
        /// Primitive root mod p (default: the least one)
        #[arg(long)]
        theta: Option<u64>,
        /// Component indices, comma separated, e.g. 1,2
        #[arg(long = "K", value_delimiter = ',', required = true)]
        k: Vec<u64>,
    },
    /// Union of Bose components mod q^2-1 for multipliers K
    Bose {
        #[command(flatten)]
        field: FieldArgs,
        /// Subfield multipliers, comma separated, e.g. 1,2
        #[arg(long = "K", value_delimiter = ',', required = true)]
        k: Vec<u64>,
    },
    /// Union of Singer components mod q^2+q+1 for pairs K
    Singer {
        #[command(flatten)]
        field: FieldArgs,
        /// Index pairs, e.g. "(1,1);(1,2)"
        #[arg(long = "K", value_parser = parse_pairs)]
        k: Pairs,
    },
    /// The four-block integer family with g-value at most g
    Block {
        #[arg(long)]
        g: u64,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// Prime base field; the extension degree comes from the construction
    #[arg(long, conflicts_with = "q")]
    p: Option<u64>,
    /// Prime-power base field q = p^m, built over F_p automatically
    #[arg(long)]
    q: Option<u64>,
    /// Modulus polynomial over F_p, e.g. "x^2+3x+6" (only with --p)
    #[arg(long, conflicts_with = "q")]
    modulus: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Set literal, e.g. "{1,2,5,7}" or "{0,1,3} mod 7"
    #[arg(long = "set")]
    set: String,
    /// Cyclic modulus when the literal has no "mod" suffix
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Bound the g-value must not exceed
    #[arg(long)]
    g: u64,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Largest subset of [1, n] with g-value at most g
    RMax {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
    },
    /// Largest subset of Z_n with g-value at most g
    CMax {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
    },
    /// Least n such that [1, n] holds k elements with g-value at most g
    RMinN {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        k: u64,
    },
    /// Least n such that Z_n holds k elements with g-value at most g
    CMinN {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        k: u64,
    },
    /// Minimal span of a k-element Sidon set with every canonical witness
    Shortest {
        #[arg(long)]
        k: u64,
    },
    /// Least-container thresholds over ranges of g and k
    Table {
        /// R for intervals [1, n], C for Z_n
        #[arg(long, value_parser = parse_problem)]
        which: Problem,
        /// Inclusive range like 2..6, or a single value
        #[arg(long, value_parser = parse_range)]
        g: Range,
        /// Inclusive range like 3..10, or a single value
        #[arg(long, value_parser = parse_range)]
        k: Range,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Closed-form upper bound on C(g,n)
    CUpper {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        n: u64,
    },
    /// Best certified lower bound on sigma(g) per g in the range
    Sigma {
        /// Inclusive range like 2..22, or a single value
        #[arg(long, value_parser = parse_range)]
        g: Range,
    },
}

#[derive(Args)]
struct CombineArgs {
    /// Cyclic set literal, e.g. "{0,1,3} mod 7"
    #[arg(long = "M")]
    m: String,
    /// Second set: cyclic literal selects CRT, integer literal interleaving
    #[arg(long = "S")]
    s: String,
}

#[derive(Subcommand)]
enum TablesCmd {
    /// Recompute embedded table 1, 2, or 3 and report a cell-by-cell diff
    Reproduce {
        #[arg(long)]
        which: u8,
    },
}

#[derive(Clone, Debug)]
struct Pairs(Vec<(u64, u64)>);

#[derive(Clone, Copy, Debug)]
struct Range {
    lo: u64,
    hi: u64,
}

impl Range {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

fn parse_budget(text: &str) -> std::result::Result<u64, String> {
    let t = text.trim();
    if let Ok(v) = t.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = t
        .parse()
        .map_err(|_| format!("budget {t:?} is not a number"))?;
    if !f.is_finite() || f < 0.0 || f > u64::MAX as f64 || f.fract() != 0.0 {
        return Err(format!("budget {t:?} is not a whole nonnegative number"));
    }
    Ok(f as u64)
}

fn parse_range(text: &str) -> std::result::Result<Range, String> {
    let t = text.trim();
    let (lo, hi) = match t.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, t),
    };
    let lo: u64 = lo.parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: u64 = hi.parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {t:?}"));
    }
    Ok(Range { lo, hi })
}

fn parse_problem(text: &str) -> std::result::Result<Problem, String> {
    match text.trim() {
        "R" | "r" => Ok(Problem::Linear),
        "C" | "c" => Ok(Problem::Cyclic),
        other => Err(format!("expected R or C, got {other:?}")),
    }
}

fn parse_pairs(text: &str) -> std::result::Result<Pairs, String> {
    let mut pairs = Vec::new();
    for part in text.split(';') {
        let inner = part
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("expected (a,b), got {part:?}"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| format!("expected (a,b), got {part:?}"))?;
        let a: u64 = a.trim().parse().map_err(|_| format!("bad index {a:?}"))?;
        let b: u64 = b.trim().parse().map_err(|_| format!("bad index {b:?}"))?;
        pairs.push((a, b));
    }
    if pairs.is_empty() {
        return Err("at least one pair is required".into());
    }
    Ok(Pairs(pairs))
}

#[derive(Serialize)]
struct RunRecord {
    command: String,
    parameters: BTreeMap<String, Value>,
    result: Value,
    version: String,
    elapsed_ms: u128,
}

/// What one dispatched command hands back: the comparable result payload,
/// optional CSV rows, whether CSV is this command's natural stdout form,
/// and the exit code.
struct Outcome {
    result: Value,
    csv: Option<String>,
    csv_is_default: bool,
    exit: i32,
}

impl Outcome {
    fn json(result: Value) -> Outcome {
        Outcome {
            result,
            csv: None,
            csv_is_default: false,
            exit: 0,
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // a second global-pool build (tests, repeated calls) keeps the first
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let budget = cli.budget.unwrap_or(DEFAULT_BUDGET);
    let started = Instant::now();
    let (command, parameters) = describe(&cli.command, budget);
    match dispatch(&cli.command, budget) {
        Ok(outcome) => {
            let record = RunRecord {
                command,
                parameters,
                result: outcome.result,
                version: env!("CARGO_PKG_VERSION").into(),
                elapsed_ms: started.elapsed().as_millis(),
            };
            match emit(&record, outcome.csv, outcome.csv_is_default, cli.out.as_deref()) {
                Ok(()) => outcome.exit,
                Err(e) => report_error(&record.command, &record.parameters, started, &e),
            }
        }
        Err(e) => report_error(&command, &parameters, started, &e),
    }
}

fn report_error(
    command: &str,
    parameters: &BTreeMap<String, Value>,
    started: Instant,
    e: &Error,
) -> i32 {
    let record = RunRecord {
        command: command.into(),
        parameters: parameters.clone(),
        result: json!({ "error": e.name(), "message": e.to_string() }),
        version: env!("CARGO_PKG_VERSION").into(),
        elapsed_ms: started.elapsed().as_millis(),
    };
    println!("{}", serde_json::to_string_pretty(&record).unwrap());
    3
}

fn emit(
    record: &RunRecord,
    csv: Option<String>,
    csv_is_default: bool,
    out: Option<&Path>,
) -> Result<()> {
    let record_json = serde_json::to_string_pretty(record).expect("run records serialize");
    match out {
        None => {
            if csv_is_default {
                print!("{}", csv.as_deref().unwrap_or_default());
            } else {
                println!("{record_json}");
            }
        }
        Some(path) => match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => {
                let body = csv.ok_or_else(|| {
                    Error::InvalidInput("this command has no CSV form; use --out file.json".into())
                })?;
                std::fs::write(path, body)
                    .map_err(|e| Error::InvalidInput(format!("cannot write {path:?}: {e}")))?;
                println!("{record_json}");
            }
            Some("json") => {
                std::fs::write(path, &record_json)
                    .map_err(|e| Error::InvalidInput(format!("cannot write {path:?}: {e}")))?;
                println!("{record_json}");
            }
            _ => {
                return Err(Error::InvalidInput(format!(
                    "--out {path:?} must end in .csv or .json"
                )))
            }
        },
    }
    Ok(())
}

fn describe(command: &Command, budget: u64) -> (String, BTreeMap<String, Value>) {
    let mut p = BTreeMap::new();
    let name = match command {
        Command::Construct { which } => match which {
            ConstructCmd::Ruzsa { p: prime, theta, k } => {
                p.insert("p".into(), json!(prime));
                if let Some(t) = theta {
                    p.insert("theta".into(), json!(t));
                }
                p.insert("K".into(), json!(k));
                "construct ruzsa"
            }
            ConstructCmd::Bose { field, k } => {
                field_params(&mut p, field);
                p.insert("K".into(), json!(k));
                "construct bose"
            }
            ConstructCmd::Singer { field, k } => {
                field_params(&mut p, field);
                p.insert("K".into(), json!(k.0));
                "construct singer"
            }
            ConstructCmd::Block { g } => {
                p.insert("g".into(), json!(g));
                "construct block"
            }
        },
        Command::Verify(args) => {
            p.insert("set".into(), json!(args.set));
            if let Some(m) = args.modulus {
                p.insert("mod".into(), json!(m));
            }
            p.insert("g".into(), json!(args.g));
            "verify"
        }
        Command::Search { which } => {
            p.insert("budget".into(), json!(budget));
            match which {
                SearchCmd::RMax { g, n } => {
                    p.insert("g".into(), json!(g));
                    p.insert("n".into(), json!(n));
                    "search r-max"
                }
                SearchCmd::CMax { g, n } => {
                    p.insert("g".into(), json!(g));
                    p.insert("n".into(), json!(n));
                    "search c-max"
                }
                SearchCmd::RMinN { g, k } => {
                    p.insert("g".into(), json!(g));
                    p.insert("k".into(), json!(k));
                    "search r-min-n"
                }
                SearchCmd::CMinN { g, k } => {
                    p.insert("g".into(), json!(g));
                    p.insert("k".into(), json!(k));
                    "search c-min-n"
                }
                SearchCmd::Shortest { k } => {
                    p.insert("k".into(), json!(k));
                    "search shortest"
                }
                SearchCmd::Table { which, g, k } => {
                    p.insert("which".into(), json!(which.to_string()));
                    p.insert("g".into(), json!(format!("{}..{}", g.lo, g.hi)));
                    p.insert("k".into(), json!(format!("{}..{}", k.lo, k.hi)));
                    "search table"
                }
            }
        }
        Command::Bounds { which } => match which {
            BoundsCmd::CUpper { g, n } => {
                p.insert("g".into(), json!(g));
                p.insert("n".into(), json!(n));
                "bounds c-upper"
            }
            BoundsCmd::Sigma { g } => {
                p.insert("g".into(), json!(format!("{}..{}", g.lo, g.hi)));
                "bounds sigma"
            }
        },
        Command::Combine(args) => {
            p.insert("M".into(), json!(args.m));
            p.insert("S".into(), json!(args.s));
            "combine"
        }
        Command::Tables { which } => match which {
            TablesCmd::Reproduce { which } => {
                p.insert("which".into(), json!(which));
                p.insert("budget".into(), json!(budget));
                "tables reproduce"
            }
        },
    };
    (name.into(), p)
}

fn field_params(p: &mut BTreeMap<String, Value>, field: &FieldArgs) {
    if let Some(prime) = field.p {
        p.insert("p".into(), json!(prime));
    }
    if let Some(q) = field.q {
        p.insert("q".into(), json!(q));
    }
    if let Some(m) = &field.modulus {
        p.insert("modulus".into(), json!(m));
    }
}

fn dispatch(command: &Command, budget: u64) -> Result<Outcome> {
    match command {
        Command::Construct { which } => run_construct(which),
        Command::Verify(args) => run_verify(args),
        Command::Search { which } => run_search(which, budget),
        Command::Bounds { which } => run_bounds(which),
        Command::Combine(args) => run_combine(args),
        Command::Tables {
            which: TablesCmd::Reproduce { which },
        } => run_reproduce(*which, budget),
    }
}

fn build_field(field: &FieldArgs, degree: u32) -> Result<FieldCtx> {
    match (field.p, field.q) {
        (Some(p), None) => {
            let modulus = field
                .modulus
                .as_deref()
                .map(|text| Poly::parse(text, p))
                .transpose()?;
            field::make_field(p, degree, modulus)
        }
        (None, Some(q)) => field::make_field_over(q, degree, None),
        _ => Err(Error::InvalidInput(
            "give exactly one of --p (prime) or --q (prime power)".into(),
        )),
    }
}

enum Built {
    Cyclic(CyclicSet),
    Integer(IntegerSet),
}

fn construct_result(construction: &str, parameters: Value, set: Built, g_bound: u64) -> Value {
    let (modulus_n, elements, cardinality, g_value) = match &set {
        Built::Cyclic(s) => (
            json!(s.modulus()),
            json!(s.elements()),
            s.len(),
            s.g_value(),
        ),
        Built::Integer(s) => (Value::Null, json!(s.elements()), s.len(), s.g_value()),
    };
    json!({
        "construction": construction,
        "parameters": parameters,
        "modulus_n": modulus_n,
        "elements": elements,
        "cardinality": cardinality,
        "g_value": g_value,
        "g_bound": g_bound,
    })
}

fn run_construct(which: &ConstructCmd) -> Result<Outcome> {
    let result = match which {
        ConstructCmd::Ruzsa { p, theta, k } => {
            let theta = match theta {
                Some(t) => *t,
                None => construct::ruzsa_default_theta(*p)?,
            };
            let set = construct::ruzsa(*p, theta, k)?;
            let bound = 2 * (k.len() * k.len()) as u64;
            construct_result(
                "ruzsa",
                json!({ "p": p, "theta": theta, "K": k }),
                Built::Cyclic(set),
                bound,
            )
        }
        ConstructCmd::Bose { field, k } => {
            let ctx = build_field(field, 2)?;
            let set = construct::bose(&ctx, k)?;
            let bound = 2 * (k.len() * k.len()) as u64;
            construct_result(
                "bose",
                json!({
                    "p": ctx.p(),
                    "modulus": ctx.modulus().to_string(),
                    "K": k,
                }),
                Built::Cyclic(set),
                bound,
            )
        }
        ConstructCmd::Singer { field, k } => {
            let ctx = build_field(field, 3)?;
            let set = construct::singer(&ctx, &k.0)?;
            let bound = 2 * (k.0.len() * k.0.len()) as u64;
            construct_result(
                "singer",
                json!({
                    "p": ctx.p(),
                    "modulus": ctx.modulus().to_string(),
                    "K": k.0,
                }),
                Built::Cyclic(set),
                bound,
            )
        }
        ConstructCmd::Block { g } => {
            let set = construct::block_set(*g)?;
            construct_result("block", json!({ "g": g }), Built::Integer(set), *g)
        }
    };
    Ok(Outcome::json(result))
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome> {
    let parsed: AnySet = args.set.parse()?;
    let set = match (parsed, args.modulus) {
        (AnySet::Integer(s), Some(n)) => AnySet::Cyclic(CyclicSet::new(n, s.elements())?),
        (AnySet::Cyclic(s), Some(n)) if s.modulus() != n => {
            return Err(Error::ContextMismatch(format!(
                "the literal says mod {}, --mod says {n}",
                s.modulus()
            )));
        }
        (set, _) => set,
    };
    let g_value = set.g_value();
    let ok = g_value <= args.g;
    let result = json!({
        "set": set.to_string(),
        "g": args.g,
        "g_value": g_value,
        "ok": ok,
    });
    Ok(Outcome {
        result,
        csv: None,
        csv_is_default: false,
        exit: if ok { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct SearchRow {
    g: u64,
    k_or_n: u64,
    value: u64,
    exhausted: bool,
    witness: String,
    nodes: u64,
}

fn search_row(cert: &SearchCertificate) -> SearchRow {
    SearchRow {
        g: cert.g,
        k_or_n: cert.parameter,
        value: cert.value,
        exhausted: cert.exhausted,
        witness: cert
            .witnesses
            .first()
            .map(|w| w.to_string())
            .unwrap_or_default(),
        nodes: cert.nodes_explored,
    }
}

fn rows_to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("rows serialize to CSV");
    }
    String::from_utf8(w.into_inner().expect("CSV buffer")).expect("CSV is UTF-8")
}

fn certificate_outcome(cert: SearchCertificate, budget: u64) -> Outcome {
    let csv = rows_to_csv(&[search_row(&cert)]);
    Outcome {
        result: json!({ "budget": budget, "certificate": cert }),
        csv: Some(csv),
        csv_is_default: false,
        exit: 0,
    }
}

fn run_search(which: &SearchCmd, budget: u64) -> Result<Outcome> {
    match which {
        SearchCmd::RMax { g, n } => Ok(certificate_outcome(
            search::max_size_linear(*g, *n, budget)?,
            budget,
        )),
        SearchCmd::CMax { g, n } => Ok(certificate_outcome(
            search::max_size_cyclic(*g, *n, budget)?,
            budget,
        )),
        SearchCmd::RMinN { g, k } => Ok(certificate_outcome(
            search::min_n_linear(*g, *k, budget)?,
            budget,
        )),
        SearchCmd::CMinN { g, k } => Ok(certificate_outcome(
            search::min_n_cyclic(*g, *k, budget)?,
            budget,
        )),
        SearchCmd::Shortest { k } => Ok(certificate_outcome(
            search::enumerate_shortest_sidon(*k, budget)?,
            budget,
        )),
        SearchCmd::Table { which, g, k } => {
            use rayon::prelude::*;
            let cells: Vec<(u64, u64)> = g
                .iter()
                .flat_map(|g| k.iter().map(move |k| (g, k)))
                .collect();
            let run = match which {
                Problem::Linear => search::min_n_linear,
                Problem::Cyclic => search::min_n_cyclic,
            };
            let mut certs: Vec<SearchCertificate> = cells
                .par_iter()
                .map(|&(g, k)| run(g, k, budget))
                .collect::<Result<_>>()?;
            certs.sort_by_key(|c| (c.g, c.parameter));
            let rows: Vec<SearchRow> = certs.iter().map(search_row).collect();
            Ok(Outcome {
                result: json!({ "budget": budget, "certificates": certs }),
                csv: Some(rows_to_csv(&rows)),
                csv_is_default: true,
                exit: 0,
            })
        }
    }
}

#[derive(Serialize)]
struct SigmaRow {
    g: u64,
    lower_bound_rational: String,
    lower_bound_float: f64,
    source: String,
}

fn sigma_row(b: &SigmaBound) -> SigmaRow {
    SigmaRow {
        g: b.g_target,
        lower_bound_rational: b.bound.to_string(),
        lower_bound_float: b.float_value,
        source: b.source.to_string(),
    }
}

fn run_bounds(which: &BoundsCmd) -> Result<Outcome> {
    match which {
        BoundsCmd::CUpper { g, n } => {
            let bound = bounds::c_upper_bound(*g, *n)?;
            Ok(Outcome::json(json!({ "g": g, "n": n, "bound": bound })))
        }
        BoundsCmd::Sigma { g } => {
            let bounds: Vec<SigmaBound> = g
                .iter()
                .map(bounds::best_sigma_lower)
                .collect::<Result<_>>()?;
            let rows: Vec<SigmaRow> = bounds.iter().map(sigma_row).collect();
            Ok(Outcome {
                result: json!({ "bounds": bounds }),
                csv: Some(rows_to_csv(&rows)),
                csv_is_default: true,
                exit: 0,
            })
        }
    }
}

fn run_combine(args: &CombineArgs) -> Result<Outcome> {
    let m: CyclicSet = args.m.parse()?;
    let s: AnySet = args.s.parse()?;
    let params = json!({ "M": m.to_string(), "S": s.to_string() });
    let g_m = m.g_value();
    let result = match s {
        AnySet::Cyclic(s) => {
            let combined = construct::crt_combine(&m, &s)?;
            construct_result("crt", params, Built::Cyclic(combined), g_m * s.g_value())
        }
        AnySet::Integer(s) => {
            let combined = construct::interleave_linear(&m, &s)?;
            construct_result(
                "interleave",
                params,
                Built::Integer(combined),
                g_m * s.g_value(),
            )
        }
    };
    Ok(Outcome::json(result))
}

#[derive(Serialize)]
struct DiffRow {
    table: u8,
    g: u64,
    k: u64,
    expected: u64,
    status: String,
    computed: u64,
    exhausted: bool,
    matches: String,
    nodes: u64,
    witness: String,
}

fn run_reproduce(which: u8, budget: u64) -> Result<Outcome> {
    let reports = tables::reproduce_table(which, budget)?;
    let mismatches = tables::mismatch_count(&reports);
    let rows: Vec<DiffRow> = reports
        .iter()
        .map(|r| DiffRow {
            table: r.table,
            g: r.g,
            k: r.k,
            expected: r.expected,
            status: r.status.to_string(),
            computed: r.computed,
            exhausted: r.exhausted,
            matches: match r.matches {
                Some(true) => "true".into(),
                Some(false) => "false".into(),
                None => String::new(),
            },
            nodes: r.nodes,
            witness: r.witness.clone(),
        })
        .collect();
    Ok(Outcome {
        result: json!({
            "budget": budget,
            "mismatches": mismatches,
            "cells": reports,
        }),
        csv: Some(rows_to_csv(&rows)),
        csv_is_default: true,
        exit: if mismatches == 0 { 0 } else { 1 },
    })
}

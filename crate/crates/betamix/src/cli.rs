//! Command-line entry point.
//!
//! Five subcommands wrap the library: `estimate`, `schedule`, `oracle`,
//! `simulate`, and `bound`. Structured results go to standard output as a
//! single JSON record (or CSV with `--format csv`); diagnostics go to
//! standard error. Exit codes: 0 success, 2 input error, 3 insufficient
//! data, 4 domain/configuration error.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bounds::{self, BoundInputs};
use crate::error::{Error, Result};
use crate::estimator;
use crate::markov::{self, MarkovChain};
use crate::schedule::make_schedule;
use crate::series::Series;
use crate::synth::{self, Seed};

pub const SCHEMA_VERSION: u32 = 1;

/// One reproducible run: command, parameters, library version, input digest,
/// and results.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub schema_version: u32,
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub params: Value,
    pub results: Vec<Value>,
}

impl RunRecord {
    fn new(command: &str, input_digest: Option<String>, params: Value) -> Self {
        RunRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest,
            params,
            results: Vec::new(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "betamix",
    version,
    about = "Estimate beta-mixing coefficients of a stationary series from one sample path"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProcessKind {
    Markov,
    Ar1,
    Iid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// Estimator deviation bound (two histograms).
    Main,
    /// Single-histogram L1 deviation bound.
    One,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Estimate the mixing coefficient at one or more lags from a series file.
    Estimate(EstimateArgs),
    /// Print the dimension/bandwidth schedule for a sample size.
    Schedule(ScheduleArgs),
    /// Exact coefficients of a finite-state chain given as a chain file.
    Oracle(OracleArgs),
    /// Generate a synthetic series on standard output, one value per line.
    Simulate(SimulateArgs),
    /// Evaluate a finite-sample deviation bound.
    Bound(BoundArgs),
}

#[derive(Debug, Args)]
struct EstimateArgs {
    /// Series file: one finite decimal per line, '#' comments; '-' for stdin.
    #[arg(long)]
    input: String,
    /// Lag(s) to estimate at; repeat or comma-separate for several.
    #[arg(long = "lag", required = true, num_args = 1.., value_delimiter = ',')]
    lags: Vec<usize>,
    /// Embedding dimension; defaults to the schedule value for n.
    #[arg(long = "dim")]
    dim: Option<usize>,
    /// Histogram bandwidth in (0, 1]; defaults to the schedule value for n.
    #[arg(long = "bandwidth")]
    bandwidth: Option<f64>,
    /// 1-based column to extract from delimiter-separated lines.
    #[arg(long)]
    column: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct ScheduleArgs {
    /// Sample size (n >= 3).
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Chain file: first line the state count S, then S rows of the
    /// transition matrix as whitespace-separated decimals.
    #[arg(long)]
    chain: PathBuf,
    /// Lag(s) to evaluate.
    #[arg(long = "lag", required = true, num_args = 1.., value_delimiter = ',')]
    lags: Vec<usize>,
    /// Window length: computes the finite-window coefficient by enumeration
    /// instead of the closed first-order formula.
    #[arg(long = "dim")]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    process: ProcessKind,
    /// Chain file (required for --process markov).
    #[arg(long)]
    chain: Option<PathBuf>,
    /// AR(1) coefficient, |phi| < 1 (required for --process ar1).
    #[arg(long)]
    phi: Option<f64>,
    /// AR(1) innovation scale (default 1).
    #[arg(long)]
    sigma: Option<f64>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long, value_enum)]
    kind: BoundKind,
    /// Blocks per parity class.
    #[arg(long)]
    mu: u64,
    /// Block length.
    #[arg(long)]
    m: u64,
    #[arg(long)]
    epsilon: f64,
    /// Plug-in expected L1 error of the marginal histogram (kind=one uses
    /// this as its single plug-in).
    #[arg(long = "l1-marginal", default_value_t = 0.0)]
    l1_marginal: f64,
    /// Plug-in expected L1 error of the joint histogram (kind=main only).
    #[arg(long = "l1-joint", default_value_t = 0.0)]
    l1_joint: f64,
    /// Mixing coefficient (or an upper bound) at lag m.
    #[arg(long = "beta-m", default_value_t = 0.0)]
    beta_m: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own usage/diagnostic text
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Parse { .. } => 2,
        Error::InsufficientData { .. } => 3,
        _ => 4,
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Estimate(args) => cmd_estimate(args),
        Command::Schedule(args) => cmd_schedule(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Bound(args) => cmd_bound(args),
    }
}

/// Reads a series file: skips blank lines and '#' comments, accepts one
/// finite decimal per remaining line (or the given 1-based column of a
/// delimiter-separated line). Returns the series and a SHA-256 digest of
/// the raw bytes.
pub fn read_series(path: &str, column: Option<usize>) -> Result<(Series, String)> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(Path::new(path))?
    };
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let text = utf8(bytes)?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let field = match column {
            None => t,
            Some(k) => {
                if k == 0 {
                    return Err(Error::Config("--column is 1-based".into()));
                }
                t.split(|c: char| c == ',' || c == ';' || c.is_whitespace())
                    .filter(|f| !f.is_empty())
                    .nth(k - 1)
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("line has no column {k}"),
                    })?
            }
        };
        let v: f64 = field.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("not a decimal: {field:?}"),
        })?;
        if !v.is_finite() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("value is not finite: {field:?}"),
            });
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no data lines in input".into(),
        });
    }
    Ok((Series::new(values)?, digest))
}

fn cmd_estimate(args: EstimateArgs) -> Result<()> {
    let (series, digest) = read_series(&args.input, args.column)?;
    let n = series.len();
    let (d, h, from_schedule) = match (args.dim, args.bandwidth) {
        (Some(d), Some(h)) => (d, h, false),
        (d, h) => {
            let sched = make_schedule(n as u64)?;
            (d.unwrap_or(sched.d), h.unwrap_or(sched.h), true)
        }
    };
    let estimates = estimator::estimate_curve(&series, &args.lags, d, h)?;

    let mut record = RunRecord::new(
        "estimate",
        Some(digest),
        json!({
            "input": args.input,
            "lags": args.lags,
            "d": d,
            "h": h,
            "schedule_defaults": from_schedule,
            "column": args.column,
        }),
    );
    for est in &estimates {
        record.results.push(serde_json::to_value(est).expect("serializable"));
    }
    emit(
        &record,
        args.format,
        &[
            "a",
            "d",
            "h",
            "n",
            "beta_hat",
            "marginal_points",
            "joint_points",
            "occupied_joint_bins",
        ],
    )
}

fn cmd_schedule(args: ScheduleArgs) -> Result<()> {
    let sched = make_schedule(args.n)?;
    let mut record = RunRecord::new("schedule", None, json!({ "n": args.n }));
    record
        .results
        .push(serde_json::to_value(sched).expect("serializable"));
    emit(&record, args.format, &["n", "d", "k", "h"])
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let bytes = std::fs::read(&args.chain)?;
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let chain = MarkovChain::parse(&utf8(bytes)?)?;
    let mut record = RunRecord::new(
        "oracle",
        Some(digest),
        json!({
            "chain": args.chain.display().to_string(),
            "states": chain.num_states(),
            "stationary": chain.stationary_distribution(),
            "lags": args.lags,
            "dim": args.dim,
        }),
    );
    for &a in &args.lags {
        let beta = match args.dim {
            None => markov::beta_exact(&chain, a)?,
            Some(d) => markov::beta_d_exact(&chain, a, d)?,
        };
        record.results.push(json!({ "a": a, "dim": args.dim, "beta": beta }));
    }
    emit(&record, args.format, &["a", "dim", "beta"])
}

fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let seed = Seed(args.seed);
    let series = match args.process {
        ProcessKind::Markov => {
            let path = args.chain.ok_or_else(|| {
                Error::Config("--process markov requires --chain".into())
            })?;
            let chain = MarkovChain::from_file(&path)?;
            synth::sample_markov(&chain, args.n, seed)?
        }
        ProcessKind::Ar1 => {
            let phi = args
                .phi
                .ok_or_else(|| Error::Config("--process ar1 requires --phi".into()))?;
            synth::sample_ar1(phi, args.sigma.unwrap_or(1.0), args.n, seed)?
        }
        ProcessKind::Iid => synth::sample_iid_uniform(args.n, seed)?,
    };
    // default float formatting round-trips exactly
    let mut out = String::new();
    for v in series.values() {
        out.push_str(&format!("{v}\n"));
    }
    print!("{out}");
    Ok(())
}

fn cmd_bound(args: BoundArgs) -> Result<()> {
    let inputs = BoundInputs {
        mu: args.mu,
        m: args.m,
        epsilon: args.epsilon,
        expected_l1_marginal: args.l1_marginal,
        expected_l1_joint: args.l1_joint,
        beta_m: args.beta_m,
    };
    let (kind_name, value, eps) = match args.kind {
        BoundKind::Main => {
            let v = bounds::estimator_deviation_bound(&inputs)?;
            let (e1, e2) = bounds::deviation_epsilons(&inputs);
            ("main", v, json!({ "epsilon_1": e1, "epsilon_2": e2 }))
        }
        BoundKind::One => {
            let v = bounds::histogram_l1_bound(
                args.mu,
                args.m,
                args.epsilon,
                args.l1_marginal,
                args.beta_m,
            )?;
            let e1 = args.epsilon - args.l1_marginal;
            ("one", v, json!({ "epsilon_1": e1 }))
        }
    };
    let mut record = RunRecord::new(
        "bound",
        None,
        json!({
            "kind": kind_name,
            "mu": args.mu,
            "m": args.m,
            "epsilon": args.epsilon,
            "l1_marginal": args.l1_marginal,
            "l1_joint": args.l1_joint,
            "beta_m": args.beta_m,
        }),
    );
    let mut result = json!({ "kind": kind_name, "value": value.value, "vacuous": value.vacuous });
    result
        .as_object_mut()
        .expect("object")
        .extend(eps.as_object().expect("object").clone());
    record.results.push(result);
    emit(&record, args.format, &["kind", "value", "vacuous"])
}

/// Prints the record as one JSON line, or as CSV with the given header.
fn emit(record: &RunRecord, format: OutputFormat, csv_fields: &[&str]) -> Result<()> {
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string(record).expect("record is serializable")
            );
        }
        OutputFormat::Csv => {
            println!("{}", csv_fields.join(","));
            for row in &record.results {
                let cells: Vec<String> = csv_fields
                    .iter()
                    .map(|f| match row.get(f) {
                        None | Some(Value::Null) => String::new(),
                        Some(Value::String(s)) => s.clone(),
                        Some(other) => other.to_string(),
                    })
                    .collect();
                println!("{}", cells.join(","));
            }
        }
    }
    Ok(())
}

fn utf8(bytes: Vec<u8>) -> Result<String> {
    String::from_utf8(bytes).map_err(|_| Error::Parse {
        line: 1,
        message: "input is not valid UTF-8".into(),
    })
}

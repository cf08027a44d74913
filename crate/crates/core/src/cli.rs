//! Command-line interface: argument definitions and the command bodies,
//! written against injected streams so they can be tested in-process.

use std::fs;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::rational::{self, RationalJson};
use crate::bounds::{bounds_report_with, BoundReport, ReportOptions};
use crate::corpus::bundled_corpus;
use crate::exact::MAX_COMPONENT_ORDER;
use crate::heuristics::{extension_zfs_with_log, random_zfs, seeded_greedy_zfs, HeuristicResult};
use crate::io::{parse_graph_text, to_dot, to_edge_list};
use crate::random::{random_graph_with, rng_from_seed, RandomModel, RandomOptions};
use crate::{closure, expected_size, parse_graph6, to_graph6, zero_forcing_number, Error, ExactOutcome};
use crate::{Graph, NamedFamily, Result, VertexSet};

/// Process exit codes; part of the stable interface.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const NOT_FORCING: i32 = 3;
    pub const BUDGET: i32 = 4;
    pub const VIOLATION: i32 = 5;
}

/// Graphs verified per parallel batch; output order follows input order.
const VERIFY_CHUNK: usize = 256;

#[derive(Debug, Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing: closure, exact values, constructions and bounds"
)]
pub struct Cli {
    /// Print bare numbers instead of JSON.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Where a single graph comes from: a file (graph6 or edge list), `-` for
/// stdin, or an inline graph6 string. Defaults to stdin.
#[derive(Debug, Clone, Args)]
pub struct Input {
    /// File holding one graph6 line or an edge list; `-` reads stdin.
    pub path: Option<String>,
    /// Inline graph6 string.
    #[arg(long, conflicts_with = "path")]
    pub g6: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeuristicMethod {
    /// Seed certificate plus greedy extension, any connected graph with Δ >= 3.
    Greedy,
    /// Path, cycle and lollipop augmentations, connected subcubic girth >= 5.
    Extension,
    /// Best of random vertex orders.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closure of a vertex set, with its forcing trace.
    Closure {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertices (labels when the edge list carried them).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Exact zero forcing number with a minimum witness.
    Exact {
        #[command(flatten)]
        input: Input,
        /// Cap on closure evaluations.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Zero forcing set from a constructive or randomized procedure.
    Heuristic {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "greedy")]
        method: HeuristicMethod,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every bound with its applicability, optionally checked against Z(G).
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Also compute Z(G) and check every applicable bound.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Checks every graph of a graph6 stream; one JSON line per graph, then a summary.
    Verify {
        /// graph6 file, one graph per line; `-` or absent reads stdin.
        path: Option<String>,
        /// Verify the bundled corpus instead of reading input.
        #[arg(long, conflicts_with = "path")]
        corpus: bool,
        /// Largest order for which Z(G) is computed.
        #[arg(long, default_value_t = 12)]
        exact_limit: usize,
        /// Cap on closure evaluations per graph.
        #[arg(long)]
        budget: Option<u64>,
        /// Report connected Δ = 3 graphs with Z(G) > n/3 + 2 on stderr.
        #[arg(long)]
        hunt_one_third: bool,
    },
    /// Emits a named family, a random graph, or the bundled corpus.
    Gen {
        /// A named family, `gnp`, `regular`, or `corpus`.
        family: String,
        /// Family parameters: integers, or `n p` for gnp and `n r` for regular.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs (graph6 only when above 1).
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Reject random graphs of smaller girth.
        #[arg(long)]
        min_girth: Option<usize>,
        /// Reject disconnected random graphs.
        #[arg(long)]
        connected: bool,
    },
    /// Exact expected size of the random-order forcing set.
    Expect {
        #[command(flatten)]
        input: Input,
    },
}

/// Streams a command runs against.
pub struct Io<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Runs a parsed command; returns the exit code. Errors are reported on
/// stderr: internal invariant failures exit with [`exit::VIOLATION`],
/// everything else with [`exit::USAGE`].
pub fn run(cli: Cli, io: &mut Io<'_>) -> i32 {
    let quiet = cli.quiet;
    match dispatch(cli.command, quiet, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            match e {
                CliError::Core(Error::Invariant(_)) => exit::VIOLATION,
                _ => exit::USAGE,
            }
        }
    }
}

/// Failure of a command before it could produce its result.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn dispatch(command: Command, quiet: bool, io: &mut Io<'_>) -> CliResult<i32> {
    match command {
        Command::Closure { input, set } => {
            let g = load_graph(&input, io.stdin)?;
            let z = parse_set(&g, &set)?;
            cmd_closure(&g, &z, quiet, io.stdout)
        }
        Command::Exact { input, budget } => {
            let g = load_graph(&input, io.stdin)?;
            cmd_exact(&g, budget, quiet, io.stdout)
        }
        Command::Heuristic {
            input,
            method,
            trials,
            seed,
        } => {
            let g = load_graph(&input, io.stdin)?;
            cmd_heuristic(&g, method, trials, seed, quiet, io.stdout)
        }
        Command::Bounds { input, exact, budget } => {
            let g = load_graph(&input, io.stdin)?;
            cmd_bounds(&g, exact, budget, quiet, io.stdout)
        }
        Command::Verify {
            path,
            corpus,
            exact_limit,
            budget,
            hunt_one_third,
        } => {
            let opts = VerifyOptions {
                exact_limit,
                budget,
                hunt_one_third,
                quiet,
            };
            if corpus {
                let lines: Vec<String> = bundled_corpus()
                    .iter()
                    .map(|c| to_graph6(&c.graph))
                    .collect::<Result<_>>()?;
                let text = lines.join("\n");
                cmd_verify(&mut text.as_bytes(), &opts, io.stdout, io.stderr)
            } else {
                match path.as_deref() {
                    None | Some("-") => cmd_verify(io.stdin, &opts, io.stdout, io.stderr),
                    Some(p) => {
                        let mut r = std::io::BufReader::new(fs::File::open(p)?);
                        cmd_verify(&mut r, &opts, io.stdout, io.stderr)
                    }
                }
            }
        }
        Command::Gen {
            family,
            params,
            format,
            seed,
            count,
            min_girth,
            connected,
        } => {
            let opts = RandomOptions {
                min_girth,
                connected,
                ..Default::default()
            };
            cmd_gen(&family, &params, format, seed, count, opts, io.stdout)
        }
        Command::Expect { input } => {
            let g = load_graph(&input, io.stdin)?;
            cmd_expect(&g, quiet, io.stdout)
        }
    }
}

/// Reads the graph named by `input`.
pub fn load_graph(input: &Input, stdin: &mut dyn BufRead) -> CliResult<Graph> {
    if let Some(g6) = &input.g6 {
        return Ok(parse_graph6(g6.trim())?);
    }
    let text = match input.path.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
        Some(p) => fs::read_to_string(p)?,
    };
    Ok(parse_graph_text(&text)?)
}

/// Parses a comma-separated vertex list. Tokens name vertex labels when the
/// graph carries them, indices otherwise.
pub fn parse_set(g: &Graph, spec: &str) -> Result<VertexSet> {
    let mut z = VertexSet::new(g.n());
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = match g.labels() {
            Some(labels) => labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| Error::InvalidParams(format!("no vertex labelled {tok:?}")))?,
            None => {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidParams(format!("expected a vertex index, found {tok:?}")))?;
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
                }
                v
            }
        };
        z.insert(v);
    }
    Ok(z)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Prints the forcing trace of `z`; exit 3 when the closure is proper.
fn cmd_closure(g: &Graph, z: &VertexSet, quiet: bool, out: &mut dyn Write) -> CliResult<i32> {
    let trace = closure(g, z)?;
    if quiet {
        writeln!(out, "{}", trace.closure.len())?;
    } else {
        emit(out, &trace)?;
    }
    Ok(if trace.is_complete() {
        exit::OK
    } else {
        exit::NOT_FORCING
    })
}

/// Prints `Z(G)` and a witness; exit 4 with the bracketing interval when the
/// budget runs out.
fn cmd_exact(g: &Graph, budget: Option<u64>, quiet: bool, out: &mut dyn Write) -> CliResult<i32> {
    if let Some(c) = g.components().iter().find(|c| c.len() > MAX_COMPONENT_ORDER) {
        return Err(Error::TooLarge {
            n: c.len(),
            max: MAX_COMPONENT_ORDER,
        }
        .into());
    }
    let outcome = zero_forcing_number(g, budget)?;
    match (&outcome, quiet) {
        (ExactOutcome::Exact(r), true) => writeln!(out, "{}", r.value)?,
        (ExactOutcome::BudgetExhausted { lower, upper, .. }, true) => writeln!(out, "{lower} {upper}")?,
        (_, false) => emit(out, &outcome)?,
    }
    Ok(match outcome {
        ExactOutcome::Exact(_) => exit::OK,
        ExactOutcome::BudgetExhausted { .. } => exit::BUDGET,
    })
}

/// Runs one procedure; exit 5 when the returned set exceeds its claim.
fn cmd_heuristic(
    g: &Graph,
    method: HeuristicMethod,
    trials: u64,
    seed: u64,
    quiet: bool,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let (result, json): (HeuristicResult, serde_json::Value) = match method {
        HeuristicMethod::Greedy => {
            let run = seeded_greedy_zfs(g)?;
            let json = serde_json::to_value(&run)?;
            (run.result, json)
        }
        HeuristicMethod::Extension => {
            let run = extension_zfs_with_log(g)?;
            let json = serde_json::to_value(&run)?;
            (run.result, json)
        }
        HeuristicMethod::Random => {
            let run = random_zfs(g, trials, seed)?;
            let json = serde_json::to_value(&run)?;
            (run.result, json)
        }
    };
    if quiet {
        writeln!(out, "{}", result.size())?;
    } else {
        emit(out, &json)?;
    }
    Ok(if result.claim_held() { exit::OK } else { exit::VIOLATION })
}

/// Prints the full bound report; exit 5 when a proven bound is contradicted.
fn cmd_bounds(g: &Graph, exact: bool, budget: Option<u64>, quiet: bool, out: &mut dyn Write) -> CliResult<i32> {
    let report = bounds_report_with(
        g,
        ReportOptions {
            exact,
            budget,
            ..Default::default()
        },
    )?;
    if quiet {
        for e in report.entries.iter().filter(|e| e.applicable) {
            if let Some(v) = &e.value {
                writeln!(out, "{} {}", e.name, rational::display(v))?;
            }
        }
        if let Some(ex) = &report.exact {
            writeln!(out, "exact {}", ex.value)?;
        }
    } else {
        emit(out, &report)?;
    }
    Ok(if report.violations.is_empty() {
        exit::OK
    } else {
        exit::VIOLATION
    })
}

/// Settings of [`cmd_verify`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub exact_limit: usize,
    pub budget: Option<u64>,
    pub hunt_one_third: bool,
    /// Suppress per-graph records; the summary is still printed.
    pub quiet: bool,
}

/// One verified graph.
#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    /// 1-based input line.
    pub line: usize,
    pub graph6: String,
    pub report: BoundReport,
    pub violations: Vec<String>,
    pub conjecture_flags: Vec<String>,
}

#[derive(Debug, Serialize)]
struct VerifyError {
    line: usize,
    graph6: String,
    error: String,
}

/// Counts printed as the last output line of [`cmd_verify`].
#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub errors: usize,
    pub exact_computed: usize,
    pub violations: usize,
    pub conjecture_flags: usize,
    pub one_third_counterexamples: usize,
}

/// Verifies a graph6 stream. Lines are processed in parallel batches and
/// written in input order. Exit 5 iff some proven bound was contradicted,
/// otherwise exit 2 if some line failed to parse or evaluate, otherwise 0.
pub fn cmd_verify(
    input: &mut dyn BufRead,
    opts: &VerifyOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let mut summary = VerifySummary::default();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(VERIFY_CHUNK);
    let mut lineno = 0;
    let mut buf = String::new();
    loop {
        buf.clear();
        let eof = input.read_line(&mut buf)? == 0;
        if !eof {
            lineno += 1;
            let t = buf.trim();
            if !t.is_empty() && !t.starts_with(">>") {
                batch.push((lineno, t.to_string()));
            }
        }
        if batch.len() == VERIFY_CHUNK || (eof && !batch.is_empty()) {
            verify_batch(&batch, opts, &mut summary, out, err)?;
            batch.clear();
        }
        if eof {
            break;
        }
    }
    serde_json::to_writer(&mut *out, &serde_json::json!({ "summary": &summary }))?;
    writeln!(out)?;
    Ok(if summary.violations > 0 {
        exit::VIOLATION
    } else if summary.errors > 0 {
        exit::USAGE
    } else {
        exit::OK
    })
}

fn verify_batch(
    batch: &[(usize, String)],
    opts: &VerifyOptions,
    summary: &mut VerifySummary,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<()> {
    let ropts = ReportOptions {
        exact: true,
        exact_max_n: opts.exact_limit,
        budget: opts.budget,
    };
    let results: Vec<Result<BoundReport>> = batch
        .par_iter()
        .map(|(_, g6)| parse_graph6(g6).and_then(|g| bounds_report_with(&g, ropts)))
        .collect();
    for ((line, g6), res) in batch.iter().zip(results) {
        summary.graphs += 1;
        let report = match res {
            Ok(r) => r,
            Err(e) => {
                summary.errors += 1;
                let rec = VerifyError {
                    line: *line,
                    graph6: g6.clone(),
                    error: e.to_string(),
                };
                writeln!(err, "line {line}: {e}")?;
                if !opts.quiet {
                    serde_json::to_writer(&mut *out, &rec)?;
                    writeln!(out)?;
                }
                continue;
            }
        };
        summary.exact_computed += usize::from(report.exact.is_some());
        summary.violations += report.violations.len();
        summary.conjecture_flags += report.conjecture_flags.len();
        if !report.violations.is_empty() {
            writeln!(
                err,
                "PROVEN BOUND VIOLATED line {line} {g6}: {}",
                report.violations.join(", ")
            )?;
        }
        if opts.hunt_one_third && report.conjecture_flags.iter().any(|f| f == "one_third") {
            summary.one_third_counterexamples += 1;
            let z = report.exact.as_ref().map_or(0, |e| e.value);
            writeln!(
                err,
                "*** ONE-THIRD COUNTEREXAMPLE line {line} {g6}: n = {}, Z = {z} > n/3 + 2",
                report.stats.n
            )?;
        }
        if !opts.quiet {
            let rec = VerifyRecord {
                line: *line,
                graph6: g6.clone(),
                violations: report.violations.clone(),
                conjecture_flags: report.conjecture_flags.clone(),
                report,
            };
            serde_json::to_writer(&mut *out, &rec)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn parse_params(family: &str, params: &[String]) -> CliResult<Vec<usize>> {
    params
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| CliError::Usage(format!("{family}: expected an integer parameter, found {p:?}")))
        })
        .collect()
}

fn random_model(family: &str, params: &[String]) -> CliResult<Option<RandomModel>> {
    let usage = |m: &str| CliError::Usage(format!("{family} takes {m}"));
    Ok(match family {
        "gnp" => {
            let [n, p] = params else { return Err(usage("n p")) };
            let n = n.parse().map_err(|_| usage("an integer n"))?;
            let p = p.parse().map_err(|_| usage("a probability p"))?;
            Some(RandomModel::Gnp { n, p })
        }
        "regular" => {
            let v = parse_params(family, params)?;
            let [n, r] = v[..] else { return Err(usage("n r")) };
            Some(RandomModel::RegularPairing { n, r })
        }
        _ => None,
    })
}

fn render(g: &Graph, format: Format, name: &str) -> Result<String> {
    Ok(match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)?),
        Format::Edges => to_edge_list(g),
        Format::Dot => to_dot(g, name),
    })
}

/// Emits graphs as text. Several graphs (random `--count`, or the corpus)
/// are only supported in graph6 form, one per line.
fn cmd_gen(
    family: &str,
    params: &[String],
    format: Format,
    seed: u64,
    count: usize,
    opts: RandomOptions,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let graphs: Vec<(String, Graph)> = if family == "corpus" {
        if !params.is_empty() {
            return Err(CliError::Usage("corpus takes no parameters".into()));
        }
        bundled_corpus().into_iter().map(|c| (c.name, c.graph)).collect()
    } else if let Some(model) = random_model(family, params)? {
        let mut rng = rng_from_seed(seed);
        (0..count)
            .map(|i| Ok((format!("g{i}"), random_graph_with(model, &mut rng, opts)?)))
            .collect::<Result<_>>()?
    } else {
        let fam = NamedFamily::from_name(family, &parse_params(family, params)?)?;
        vec![(family.to_string(), fam.generate()?)]
    };
    if graphs.len() > 1 && format != Format::Graph6 {
        return Err(CliError::Usage("several graphs can only be written as graph6".into()));
    }
    for (name, g) in &graphs {
        let ident: String = name
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        out.write_all(render(g, format, &ident)?.as_bytes())?;
    }
    Ok(exit::OK)
}

/// Prints the exact expected random-order forcing set size.
fn cmd_expect(g: &Graph, quiet: bool, out: &mut dyn Write) -> CliResult<i32> {
    let e = expected_size(g)?;
    if quiet {
        writeln!(out, "{}", rational::display(&e))?;
    } else {
        emit(out, &RationalJson::from(&e))?;
    }
    Ok(exit::OK)
}

#![forbid(unsafe_code)]

use std::fs;
use std::path::{Path, PathBuf};

use antimagic::{
    check_antimagic, check_lemma_bound, check_local_antimagic, component_label_maxima,
    construct_antimagic_radius2, construct_local_antimagic, diameter2_trials,
    exhaustive_oracle, lemma_orient_label, parse_rational, CheckMode, Graph,
    LabelSet, LabeledOrientation, Polarity, TrialBatchRecord, Verdict, VerificationReport,
};
use antimagic_cli::document::{self, build_document, document_polarity, AssignmentDocument};
use antimagic_cli::{csv, formats, CliError};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_CODES: &str = "exit codes:
  0  success; any requested verification passed
  1  verification failed (violations are printed)
  2  precondition failed: radius > 2, disconnected input, oracle too large,
     or an invalid assignment document
  3  malformed input file (edge list, labels, probability)
  4  I/O error (missing or unreadable file)
  5  usage error

environment:
  ANTIMAGIC_WORKERS  thread count for `random` trial batches (default: all cores)";

/// Constructs, verifies, and experiments with antimagic and local antimagic
/// orientations of graphs.
#[derive(Parser)]
#[command(name = "antimagic", version, after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orient and label a graph so adjacent vertices get distinct sums.
    OrientLocal(OrientLocalArgs),
    /// Orient and label a radius-<=2 graph so all sums are distinct.
    OrientR2(OrientR2Args),
    /// Apply the Euler-circuit labeling bound to a graph.
    Lemma(LemmaArgs),
    /// Re-verify an assignment document.
    Verify(VerifyArgs),
    /// Exhaustively count valid assignments on a tiny graph.
    Oracle(OracleArgs),
    /// Print radius, diameter, center, and BFS levels.
    Stats(StatsArgs),
    /// Seeded random-graph experiment batches.
    #[command(subcommand)]
    Random(RandomCommand),
}

#[derive(Args)]
struct OrientLocalArgs {
    /// Edge-list file
    #[arg(long)]
    graph: PathBuf,
    /// Label file (defaults to 1..m)
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Root vertex for the BFS levels
    #[arg(long)]
    root: Option<usize>,
    /// Write the assignment document here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrientR2Args {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LemmaArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    /// Flip every arc: sums become positive or at least -max L
    #[arg(long)]
    reversed: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Assignment document (JSON)
    #[arg(long)]
    assignment: PathBuf,
    #[arg(long, value_enum)]
    mode: VerifyMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Local,
    Full,
    Lemma,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long, value_enum)]
    mode: OracleMode,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Local,
    Full,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum RandomCommand {
    /// Sample G(n,p) and measure the diameter-two statistics.
    Diam2(Diam2Args),
    /// Sample G(n,1/2), construct, and verify antimagic orientations.
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct Diam2Args {
    #[arg(long)]
    n: usize,
    /// Edge probability as an exact rational, e.g. 1/2 or 0.3
    #[arg(long)]
    p: String,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// Write the CSV (header + row) here instead of stdout
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 5,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::OrientLocal(args) => orient_local(args),
        Command::OrientR2(args) => orient_r2(args),
        Command::Lemma(args) => lemma(args),
        Command::Verify(args) => verify(args),
        Command::Oracle(args) => oracle(args),
        Command::Stats(args) => stats(args),
        Command::Random(RandomCommand::Diam2(args)) => {
            let p = parse_rational(&args.p).map_err(|e| CliError::Format(e.to_string()))?;
            let record =
                with_worker_pool(|| diameter2_trials(args.n, &p, args.trials, args.seed))?;
            emit_record(&record, args.csv.as_deref())
        }
        Command::Random(RandomCommand::Pipeline(args)) => {
            let record = with_worker_pool(|| {
                antimagic::antimagic_pipeline_trials(args.n, args.trials, args.seed)
            })?;
            emit_record(&record, args.csv.as_deref())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    formats::parse_edge_list(&read(path)?)
}

fn load_labels_or_default(path: Option<&Path>, m: usize) -> Result<LabelSet, CliError> {
    match path {
        Some(path) => formats::parse_labels(&read(path)?),
        None => Ok(LabelSet::consecutive(m)),
    }
}

/// Writes the document, prints any violations, and turns the embedded
/// verdict into the exit status.
fn finish_with_document(
    g: &Graph,
    a: &LabeledOrientation,
    levels: Option<Vec<Vec<usize>>>,
    mode: &str,
    polarity: Option<Polarity>,
    report: &VerificationReport,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let doc = build_document(g, a, levels, mode, polarity, report);
    let text = document::render(&doc);
    match out {
        Some(path) => fs::write(path, &text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    print_violations(report);
    Ok(verdict_code(report.verdict))
}

fn verdict_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Invalid => 2,
    }
}

fn print_violations(report: &VerificationReport) {
    for violation in &report.violations {
        match violation {
            antimagic::Violation::EqualSums { u, v, sum } => {
                eprintln!(
                    "violation: vertices {u} and {v} share the sum {}",
                    antimagic::format_rational(sum)
                );
            }
            antimagic::Violation::BoundExceeded { vertex, sum, bound } => {
                eprintln!(
                    "violation: vertex {vertex} has sum {} beyond bound {}",
                    antimagic::format_rational(sum),
                    antimagic::format_rational(bound)
                );
            }
            antimagic::Violation::InvalidAssignment(reason) => {
                eprintln!("invalid assignment: {reason}");
            }
        }
    }
}

fn orient_local(args: OrientLocalArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.graph)?;
    let labels = load_labels_or_default(args.labels.as_deref(), g.edge_count())?;
    let a = construct_local_antimagic(&g, &labels, args.root)?;
    let report = check_local_antimagic(&g, &a);
    let levels = if g.vertex_count() > 0 && g.is_connected() {
        Some(g.bfs_levels(args.root.unwrap_or(0))?.levels)
    } else {
        None
    };
    finish_with_document(&g, &a, levels, "local", None, &report, args.out.as_deref())
}

fn orient_r2(args: OrientR2Args) -> Result<i32, CliError> {
    let g = load_graph(&args.graph)?;
    let labels = load_labels_or_default(args.labels.as_deref(), g.edge_count())?;
    let a = construct_antimagic_radius2(&g, &labels)?;
    let report = check_antimagic(&g, &a);
    let (_, center) = g.radius()?;
    let levels = Some(g.bfs_levels(center)?.levels);
    finish_with_document(&g, &a, levels, "full", None, &report, args.out.as_deref())
}

fn lemma(args: LemmaArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.graph)?;
    let labels = formats::parse_labels(&read(&args.labels)?)?;
    let polarity = if args.reversed {
        Polarity::Reversed
    } else {
        Polarity::Normal
    };
    let a = lemma_orient_label(&g, &labels, polarity)?;
    let maxima = component_label_maxima(&g, &a);
    let report = check_lemma_bound(&g, &a, &maxima, polarity);
    finish_with_document(
        &g,
        &a,
        None,
        "lemma",
        Some(polarity),
        &report,
        args.out.as_deref(),
    )
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    let doc: AssignmentDocument = document::parse(&read(&args.assignment)?)?;
    let (g, a) = document::extract(&doc)?;
    let report = match args.mode {
        VerifyMode::Local => check_local_antimagic(&g, &a),
        VerifyMode::Full => check_antimagic(&g, &a),
        VerifyMode::Lemma => {
            let polarity = document_polarity(&doc)?;
            let maxima = component_label_maxima(&g, &a);
            check_lemma_bound(&g, &a, &maxima, polarity)
        }
    };
    print_violations(&report);
    println!("{}", document::verdict_str(report.verdict));
    Ok(verdict_code(report.verdict))
}

fn oracle(args: OracleArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.graph)?;
    let labels = load_labels_or_default(args.labels.as_deref(), g.edge_count())?;
    let mode = match args.mode {
        OracleMode::Local => CheckMode::Local,
        OracleMode::Full => CheckMode::Full,
    };
    let outcome = exhaustive_oracle(&g, &labels, mode)?;
    println!("exists: {}", outcome.exists);
    println!("count: {}", outcome.count);
    Ok(0)
}

fn stats(args: StatsArgs) -> Result<i32, CliError> {
    let g = load_graph(&args.graph)?;
    let (radius, center) = g.radius()?;
    let diameter = g.diameter()?;
    let ls = g.bfs_levels(center)?;
    println!("n {}", g.vertex_count());
    println!("m {}", g.edge_count());
    println!("radius {radius}");
    println!("diameter {diameter}");
    println!("center {center}");
    for (i, level) in ls.levels.iter().enumerate() {
        let ids: Vec<String> = level.iter().map(|v| v.to_string()).collect();
        println!("level {i}: {}", ids.join(" "));
    }
    Ok(0)
}

/// Runs a batch inside a rayon pool sized by ANTIMAGIC_WORKERS when set.
/// Batch records do not depend on the worker count.
fn with_worker_pool<T>(job: impl FnOnce() -> antimagic::Result<T> + Send) -> Result<T, CliError>
where
    T: Send,
{
    match std::env::var("ANTIMAGIC_WORKERS") {
        Ok(value) => {
            let workers: usize = value.parse().ok().filter(|&w| w >= 1).ok_or_else(|| {
                CliError::Usage(format!(
                    "ANTIMAGIC_WORKERS must be a positive integer, got {value:?}"
                ))
            })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(job)?)
        }
        Err(_) => Ok(job()?),
    }
}

fn emit_record(record: &TrialBatchRecord, csv_path: Option<&Path>) -> Result<i32, CliError> {
    let table = csv::table(record);
    match csv_path {
        Some(path) => fs::write(path, &table)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{table}"),
    }
    Ok(0)
}

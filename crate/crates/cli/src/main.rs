//! `hidden-ties`: batch pipelines from actor-resource records to projected
//! networks, centralities, communities and cliques.
//!
//! Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 internal
//! invariant violation. Diagnostics and summaries go to stderr; payloads go
//! to `--out` or stdout.

mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

pub const THREADS_ENV: &str = "HIDDEN_TIES_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "hidden-ties",
    version,
    about = "Hidden-tie analysis of actor-resource records"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Read tabular records into a bipartite actor-resource graph.
    Ingest(IngestArgs),
    /// Project a bipartite graph onto one of its parts.
    Project(ProjectArgs),
    /// Vertex centralities and network aggregates per component.
    Metrics(MetricsArgs),
    /// Community detection.
    Communities(CommunitiesArgs),
    /// Clique counts by size and maximal cliques.
    Cliques(CliquesArgs),
    /// Egocentric network of one vertex.
    Ego(EgoArgs),
    /// Convert a graph file to another format.
    Export(ExportArgs),
}

#[derive(Args, Debug)]
struct Io {
    /// Input file, or `-` for stdin.
    #[arg(long)]
    input: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormatArg {
    Json,
    Graphml,
    Dot,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormatArg {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct IngestArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long)]
    actor_col: String,
    #[arg(long)]
    resource_col: String,
    /// Split the resource field on this character.
    #[arg(long)]
    split_delim: Option<char>,
    /// Placeholder value that drops a row; repeatable, replaces the defaults
    /// (Missing, Unknown, N/A).
    #[arg(long = "filter")]
    filters: Vec<String>,
    #[arg(long, value_enum, default_value_t = GraphFormatArg::Json)]
    format: GraphFormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Actors,
    Resources,
}

#[derive(Args, Debug)]
struct ProjectArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, value_enum)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = GraphFormatArg::Json)]
    format: GraphFormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ScaleArg {
    Raw,
    Normalized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum ComponentArg {
    Largest,
    All,
    Index(usize),
}

fn parse_component(s: &str) -> Result<ComponentArg, String> {
    match s {
        "largest" => Ok(ComponentArg::Largest),
        "all" => Ok(ComponentArg::All),
        _ => s
            .parse()
            .map(ComponentArg::Index)
            .map_err(|_| format!("expected largest, all or a component index, got {s:?}")),
    }
}

#[derive(Args, Debug)]
struct MetricsArgs {
    #[command(flatten)]
    io: Io,
    /// `largest`, `all`, or a component index (0 is the largest).
    #[arg(long, value_parser = parse_component, default_value = "largest")]
    component: ComponentArg,
    #[arg(long, value_enum, default_value_t = ScaleArg::Raw)]
    closeness: ScaleArg,
    #[arg(long, value_enum, default_value_t = ScaleArg::Raw)]
    betweenness: ScaleArg,
    /// Add degree centrality, clustering and component columns to CSV.
    #[arg(long)]
    extended: bool,
    #[arg(long, value_enum, default_value_t = ReportFormatArg::Json)]
    format: ReportFormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Gn,
    Cnm,
    Wt,
    Walktrap,
}

#[derive(Args, Debug)]
struct CommunitiesArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, value_enum)]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = hidden_ties::communities::DEFAULT_WALK_LENGTH)]
    walk_length: usize,
    /// Smallest community listed; the assignment map stays complete.
    #[arg(long, default_value_t = 3)]
    min_size: usize,
    #[arg(long, value_enum, default_value_t = ReportFormatArg::Json)]
    format: ReportFormatArg,
}

#[derive(Args, Debug)]
struct CliquesArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, default_value_t = 3)]
    min_k: usize,
    #[arg(long, value_enum, default_value_t = ReportFormatArg::Json)]
    format: ReportFormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RadiusArg {
    #[value(name = "1")]
    One,
    #[value(name = "1.5")]
    OnePointFive,
}

#[derive(Args, Debug)]
struct EgoArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long)]
    vertex: String,
    #[arg(long, value_enum, default_value_t = RadiusArg::OnePointFive)]
    radius: RadiusArg,
    /// Emit nothing (and report `skipped`) unless the ego network has more
    /// than this many edges.
    #[arg(long)]
    min_edges: Option<usize>,
    #[arg(long, value_enum, default_value_t = GraphFormatArg::Json)]
    format: GraphFormatArg,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long, value_enum)]
    format: GraphFormatArg,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t >= 1).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Ingest(a) => commands::ingest(a),
        Command::Project(a) => commands::project(a),
        Command::Metrics(a) => commands::metrics(a),
        Command::Communities(a) => commands::communities(a),
        Command::Cliques(a) => commands::cliques(a),
        Command::Ego(a) => commands::ego(a),
        Command::Export(a) => commands::export(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

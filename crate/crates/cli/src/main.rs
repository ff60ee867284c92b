//! `totdom`: build graphs, compute total domination parameters, scan
//! graph6 streams for total k-uniform graphs and run the verification suite.
//!
//! Every command ends its standard output with one line of the form
//! `summary TOKEN...`, each token either `key=value` or a bare word.
//!
//! Exit codes: 0 success, 1 failed checks or other errors, 2 parse error,
//! 3 total domination undefined, 4 timeout, 5 resource limit.

use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use totdom::constructions;
use totdom::domination::{domination_report, SolverConfig};
use totdom::io::{decode_graph6, encode_graph6, read_edge_list, write_dot, write_edge_list, GRAPH6_HEADER};
use totdom::scan::{scan, ScanOptions};
use totdom::verify::{run_with, Fixtures, Level};
use totdom::{Error, Graph};

#[derive(Parser)]
#[command(name = "totdom", version, about = "Total domination and total k-uniform graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and print it.
    Construct(ConstructArgs),
    /// Compute gamma_t, the Grundy total domination number and the verdict.
    Compute(ComputeArgs),
    /// Filter a graph6 stream down to its total k-uniform graphs.
    Scan(ScanArgs),
    /// Run the verification suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    format: OutputFormat,
    /// Refuse to build graphs with more vertices.
    #[arg(long, default_value_t = 512, global = true)]
    max_n: usize,
}

#[derive(Subcommand)]
enum Family {
    Complete { n: usize },
    /// Complete multipartite graph with the given part sizes.
    Multipartite {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
    Star { leaves: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// K_{n,n} minus a perfect matching.
    Crown { n: usize },
    /// The line graph of K_n.
    LineComplete { n: usize },
    /// Bipartite double cover of the graph6 record read from FILE or stdin.
    DoubleCover { input: Option<PathBuf> },
    /// Direct product of the first two graph6 records read from FILE or stdin.
    Product { input: Option<PathBuf> },
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file; stdin when absent.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Seconds before the solvers give up.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = 64)]
    max_n: usize,
    /// Memory cap for the Grundy memo table, in MiB.
    #[arg(long, default_value_t = 2048)]
    memo_cap_mib: usize,
}

#[derive(Args)]
struct ScanArgs {
    /// Input file; stdin when absent.
    input: Option<PathBuf>,
    /// Keep only graphs that are total k-uniform for this k.
    #[arg(long)]
    k: Option<usize>,
    /// Worker threads.
    #[arg(long, env = "TOTDOM_THREADS")]
    parallel: Option<usize>,
    #[arg(long)]
    progress_every: Option<usize>,
    #[arg(long, default_value_t = 64)]
    max_n: usize,
    /// Per-graph time limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tamper {
    Crown,
    LineComplete,
    DoubleCover,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    level: LevelArg,
    #[arg(long, env = "TOTDOM_THREADS")]
    threads: Option<usize>,
    /// Replace a construction with a broken one (harness self-test).
    #[arg(long, value_enum, hide = true)]
    tamper: Option<Tamper>,
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(code: u8, kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            kind,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::MalformedGraph6(_) | Error::Parse { .. } => (2, "parse"),
            Error::IsolatedVertexPresent(_) | Error::EmptyGraph => (3, "undefined"),
            Error::TimedOut => (4, "timeout"),
            Error::ResourceLimit { .. } | Error::TooLarge { .. } => (5, "resource-limit"),
            _ => (1, "invalid"),
        };
        Failure::new(code, kind, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(1, "io", e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    let result = match cli.command {
        Command::Construct(args) => construct(args, &mut stdout),
        Command::Compute(args) => compute(args, &mut stdout),
        Command::Scan(args) => run_scan(args, &mut stdout),
        Command::VerifyPaper(args) => verify(args, &mut stdout),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            // An empty kind means the command already wrote its summary.
            if !f.kind.is_empty() {
                let _ = writeln!(stdout, "summary error={}", f.kind);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p)?,
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

/// graph6 records in `text`, skipping blanks, headers and summary lines.
fn graph6_records(text: &str) -> Result<Vec<Graph>, Failure> {
    text.lines()
        .map(str::trim_end)
        .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER && !l.starts_with("summary "))
        .map(|l| decode_graph6(l).map_err(Failure::from))
        .collect()
}

fn time_limit(secs: Option<f64>) -> Result<Option<Duration>, Failure> {
    secs.map(|s| {
        Duration::try_from_secs_f64(s).map_err(|e| Failure::new(2, "parse", format!("--time-limit: {e}")))
    })
    .transpose()
}

fn too_large(n: usize, limit: usize) -> Failure {
    Error::TooLarge { n, limit }.into()
}

fn construct(args: ConstructArgs, out: &mut impl Write) -> CmdResult {
    let limit = args.max_n;
    let check = |n: Option<usize>| match n {
        Some(n) if n <= limit => Ok(()),
        Some(n) => Err(too_large(n, limit)),
        None => Err(too_large(usize::MAX, limit)),
    };
    let g = match args.family {
        Family::Complete { n } => {
            check(Some(n))?;
            constructions::complete_graph(n)?
        }
        Family::Multipartite { sizes } => {
            check(sizes.iter().try_fold(0usize, |a, &b| a.checked_add(b)))?;
            constructions::complete_multipartite(&sizes)?
        }
        Family::Star { leaves } => {
            check(leaves.checked_add(1))?;
            constructions::star(leaves)?
        }
        Family::Path { n } => {
            check(Some(n))?;
            constructions::path(n)?
        }
        Family::Cycle { n } => {
            check(Some(n))?;
            constructions::cycle(n)?
        }
        Family::Crown { n } => {
            check(n.checked_mul(2))?;
            constructions::crown(n)?
        }
        Family::LineComplete { n } => {
            check(n.checked_mul(n.saturating_sub(1)).map(|x| x / 2))?;
            constructions::line_graph_of_complete(n)?.0
        }
        Family::DoubleCover { input } => {
            let graphs = graph6_records(&read_input(input.as_ref())?)?;
            let [g] = graphs.as_slice() else {
                return Err(Failure::new(2, "parse", format!("expected 1 graph6 record, found {}", graphs.len())));
            };
            check(g.n().checked_mul(2))?;
            constructions::bipartite_double_cover(g)
        }
        Family::Product { input } => {
            let graphs = graph6_records(&read_input(input.as_ref())?)?;
            let [g, h] = graphs.as_slice() else {
                return Err(Failure::new(2, "parse", format!("expected 2 graph6 records, found {}", graphs.len())));
            };
            check(g.n().checked_mul(h.n()))?;
            constructions::direct_product(g, h)
        }
    };
    match args.format {
        OutputFormat::Graph6 => writeln!(out, "{}", encode_graph6(&g)?)?,
        OutputFormat::EdgeList => write!(out, "{}", write_edge_list(&g))?,
        OutputFormat::Dot => write!(out, "{}", write_dot(&g))?,
    }
    writeln!(out, "summary n={} m={}", g.n(), g.edge_count())?;
    Ok(())
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn compute(args: ComputeArgs, out: &mut impl Write) -> CmdResult {
    let text = read_input(args.input.as_ref())?;
    let g = match args.format {
        InputFormat::EdgeList => {
            let body: String = text
                .lines()
                .filter(|l| !l.starts_with("summary "))
                .flat_map(|l| [l, "\n"])
                .collect();
            read_edge_list(&body)?
        }
        InputFormat::Graph6 => {
            let graphs = graph6_records(&text)?;
            let [g] = <[Graph; 1]>::try_from(graphs).map_err(|v| {
                Failure::new(2, "parse", format!("expected 1 graph6 record, found {}", v.len()))
            })?;
            g
        }
    };
    if g.n() > args.max_n {
        return Err(too_large(g.n(), args.max_n));
    }
    writeln!(out, "n={} m={}", g.n(), g.edge_count())?;
    let mut config = match time_limit(args.time_limit)? {
        Some(limit) => SolverConfig::with_time_limit(limit),
        None => SolverConfig::default(),
    };
    config.memo_cap_bytes = args.memo_cap_mib.saturating_mul(1 << 20);

    let report = domination_report(&g, &config)?;
    writeln!(out, "gamma_t={} witness={}", report.gamma_t, join(report.gamma_t_witness.iter()))?;
    writeln!(out, "grundy={} witness={}", report.grundy, join(report.grundy_witness.iter().copied()))?;
    let verdict = if report.gamma_t == report.grundy {
        format!("uniform k={}", report.gamma_t)
    } else {
        "not-uniform".to_string()
    };
    writeln!(out, "summary gamma_t={} grundy={} {verdict}", report.gamma_t, report.grundy)?;
    Ok(())
}

fn run_scan(args: ScanArgs, out: &mut impl Write) -> CmdResult {
    let opts = ScanOptions {
        k: args.k,
        threads: args.parallel.unwrap_or(0),
        max_n: args.max_n,
        time_limit: time_limit(args.time_limit)?,
        progress_every: args.progress_every,
        ..ScanOptions::default()
    };
    let input: Box<dyn BufRead> = match &args.input {
        Some(p) => Box::new(BufReader::new(fs::File::open(p)?)),
        None => Box::new(io::stdin().lock()),
    };
    scan(input, out, io::stderr(), &opts)?;
    Ok(())
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> CmdResult {
    if let Some(threads) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::new(1, "invalid", e.to_string()))?;
    }
    let level = match args.level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let mut fixtures = Fixtures::default();
    match args.tamper {
        Some(Tamper::Crown) => fixtures.crown = |n| constructions::complete_graph(2 * n).unwrap(),
        Some(Tamper::LineComplete) => {
            fixtures.line_graph_of_complete = |n| constructions::line_graph_of_complete(n - 1).unwrap().0
        }
        Some(Tamper::DoubleCover) => fixtures.double_cover = |g| constructions::disjoint_union(g, g),
        None => {}
    }
    let report = run_with(level, fixtures, |o| {
        let _ = writeln!(out, "{o}");
        let _ = out.flush();
    });
    writeln!(out, "{}", report.summary_line())?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::new(1, "", "verification failed"))
    }
}

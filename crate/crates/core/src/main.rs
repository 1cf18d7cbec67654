use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use hyperpart::degeneracy::{coloring_number, peel, PeelResult};
use hyperpart::exchange::{sequential_max_partition_with_limit, DEFAULT_MAX_ORDER_VERTICES};
use hyperpart::hardpair::recognize;
use hyperpart::harness::suite::{default_fixtures, run_suite, SuiteConfig};
use hyperpart::harness::{BudgetSpec, Generator, InstanceSpec};
use hyperpart::solver::{
    brute_force_partitionable, solve, SolveOptions, SolveOutcome, Verdict,
    DEFAULT_BRUTE_FORCE_BUDGET,
};
use hyperpart::{DegreeBudget, Hypergraph, VectorFunction};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_NEGATIVE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

/// Partitions of hypergraphs into strictly degenerate parts.
#[derive(Parser, Debug)]
#[command(name = "hyperpart", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the coloring number.
    Col {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide strict h-degeneracy; prints an elimination order or the stuck core.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        h: PathBuf,
    },
    /// Recognize a hard pair and print its certificate.
    Hardpair(PairArgs),
    /// Find an f-partition or an obstruction.
    Partition {
        #[command(flatten)]
        pair: PairArgs,
        /// Search even where budgets fall below degrees.
        #[arg(long)]
        force: bool,
    },
    /// Find an f-partition whose parts 1..p-1 are successively maximum.
    Maxpartition {
        #[command(flatten)]
        pair: PairArgs,
        /// Write the exchange trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Largest number of undecided vertices for the maximum-order search.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER_VERTICES as u128)]
        budget: u128,
    },
    /// Brute-force partition search.
    Oracle {
        #[command(flatten)]
        pair: PairArgs,
        /// Largest number of assignments to enumerate.
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_BUDGET)]
        budget: u128,
    },
    /// Generate an instance.
    Gen(GenArgs),
    /// Run a named acceptance suite.
    Suite {
        name: String,
        /// Directory of round-trip fixtures.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    f: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Tkn,
    Tcn,
    Merge,
    Random,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Order of the second complete multigraph of `merge`.
    #[arg(long, default_value_t = 3)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    edge_size: usize,
    #[arg(long, default_value_t = 2)]
    multiplicity: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random budgets with this many parts.
    #[arg(long, conflicts_with = "constant")]
    p: Option<usize>,
    /// Constant budgets, comma separated.
    #[arg(long = "const", value_delimiter = ',')]
    constant: Option<Vec<usize>>,
    /// Output file for the hypergraph (stdout if omitted).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Output file for the budgets.
    #[arg(long)]
    f: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] hyperpart::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(hyperpart::Error::Hypothesis { .. }) => EXIT_HYPOTHESIS,
            CliError::Lib(_) => EXIT_ERROR,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_pair(args: &PairArgs) -> Result<(Hypergraph, VectorFunction), CliError> {
    let g = Hypergraph::parse(&read(&args.graph)?)?;
    let f = VectorFunction::parse(&read(&args.f)?)?;
    if f.len() != g.vertex_count() {
        return Err(hyperpart::Error::LengthMismatch {
            what: "vector function",
            got: f.len(),
            expected: g.vertex_count(),
        }
        .into());
    }
    Ok((g, f))
}

fn ids(vertices: impl IntoIterator<Item = usize>) -> String {
    vertices
        .into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Prints a partition or the obstructions; returns the exit code.
fn report_outcome(outcome: &SolveOutcome, out: &mut String) -> u8 {
    if let Some(partition) = outcome.partition() {
        out.push_str(&partition.to_string());
        return EXIT_OK;
    }
    for comp in &outcome.components {
        match &comp.verdict {
            Verdict::Partitioned(_) => {}
            Verdict::Obstruction(cert) => {
                out.push_str(&format!(
                    "obstruction [{}]\n{cert}",
                    ids(comp.vertices.iter())
                ));
            }
            Verdict::Infeasible => {
                out.push_str(&format!("no partition [{}]\n", ids(comp.vertices.iter())));
            }
        }
    }
    EXIT_NEGATIVE
}

fn run(command: Command) -> Result<(String, u8), CliError> {
    let mut out = String::new();
    let code = match command {
        Command::Col { graph } => {
            let g = Hypergraph::parse(&read(&graph)?)?;
            out.push_str(&format!("{}\n", coloring_number(&g)));
            EXIT_OK
        }
        Command::Check { graph, h } => {
            let g = Hypergraph::parse(&read(&graph)?)?;
            let h = DegreeBudget::parse(&read(&h)?)?;
            if h.len() != g.vertex_count() {
                return Err(hyperpart::Error::LengthMismatch {
                    what: "degree budget",
                    got: h.len(),
                    expected: g.vertex_count(),
                }
                .into());
            }
            match peel(&g, &h) {
                PeelResult::Order(order) => {
                    out.push_str(&format!("strictly degenerate\norder: {}\n", ids(order)));
                    EXIT_OK
                }
                PeelResult::Core(core) => {
                    out.push_str(&format!(
                        "not strictly degenerate\ncore: {}\n",
                        ids(core.iter())
                    ));
                    EXIT_NEGATIVE
                }
            }
        }
        Command::Hardpair(pair) => {
            let (g, f) = load_pair(&pair)?;
            match recognize(&g, &f)? {
                Some(cert) => {
                    out.push_str(&format!("hard pair\n{cert}"));
                    EXIT_NEGATIVE
                }
                None => {
                    out.push_str("not hard\n");
                    EXIT_OK
                }
            }
        }
        Command::Partition { pair, force } => {
            let (g, f) = load_pair(&pair)?;
            let outcome = solve(&g, &f, SolveOptions { force })?;
            report_outcome(&outcome, &mut out)
        }
        Command::Maxpartition {
            pair,
            trace,
            budget,
        } => {
            let (g, f) = load_pair(&pair)?;
            let limit = usize::try_from(budget).unwrap_or(usize::MAX);
            let seq = sequential_max_partition_with_limit(&g, &f, limit)?;
            if let Some(path) = trace {
                let mut text = seq.trace_lines().join("\n");
                if !text.is_empty() {
                    text.push('\n');
                }
                write(&path, &text)?;
            }
            let code = report_outcome(&seq.outcome, &mut out);
            if let Some(partition) = seq.outcome.partition() {
                let sizes: Vec<String> = partition
                    .part_sizes()
                    .iter()
                    .map(usize::to_string)
                    .collect();
                out.push_str(&format!("# sizes {}\n", sizes.join(" ")));
            }
            code
        }
        Command::Oracle { pair, budget } => {
            let (g, f) = load_pair(&pair)?;
            match brute_force_partitionable(&g, &f, budget)? {
                Some(partition) => {
                    out.push_str(&partition.to_string());
                    EXIT_OK
                }
                None => {
                    out.push_str("no partition\n");
                    EXIT_NEGATIVE
                }
            }
        }
        Command::Gen(args) => {
            gen(&args, &mut out)?;
            EXIT_OK
        }
        Command::Suite { name, fixtures } => {
            let config = SuiteConfig {
                fixtures: fixtures.unwrap_or_else(|| default_fixtures().to_path_buf()),
                binary: std::env::current_exe().ok(),
            };
            let reports = run_suite(&name, &config, |r| {
                println!("{r}");
                for failure in &r.failures {
                    println!("    {failure}");
                }
            })
            .map_err(|e| CliError::Usage(e.to_string()))?;
            if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_ERROR
            }
        }
    };
    Ok((out, code))
}

fn gen(args: &GenArgs, out: &mut String) -> Result<(), CliError> {
    let generator = match args.family {
        Family::Tkn => Generator::Complete {
            t: args.t,
            n: args.n,
        },
        Family::Tcn => Generator::Cycle {
            t: args.t,
            n: args.n,
        },
        Family::Merge => Generator::Merge {
            t: args.t,
            n: args.n,
            m: args.m,
        },
        Family::Random => Generator::Random {
            n: args.n,
            max_edge_size: args.edge_size,
            max_multiplicity: args.multiplicity,
        },
    };
    let budgets = match (&args.constant, args.p) {
        (Some(values), _) => BudgetSpec::Constant(values.clone()),
        (None, Some(p)) => BudgetSpec::Random { p },
        (None, None) if args.f.is_some() => BudgetSpec::Random { p: 2 },
        (None, None) => BudgetSpec::None,
    };
    let spec = InstanceSpec {
        generator,
        budgets,
        seed: args.seed,
    };
    let (g, f) = spec.build()?;
    match &args.graph {
        Some(path) => write(path, &g.to_text())?,
        None => out.push_str(&g.to_text()),
    }
    if let Some(f) = f {
        match &args.f {
            Some(path) => write(path, &f.to_string())?,
            None => out.push_str(&f.to_string()),
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

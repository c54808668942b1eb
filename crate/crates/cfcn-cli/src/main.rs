//! `cfcn` — CFCN coloring from the command line.
//!
//! Exit codes: 0 success, 1 verification/validity failure, 2 usage or
//! parse error, 3 resample-budget exhaustion.

mod bench;
mod commands;
mod document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "cfcn",
    version,
    about = "Conflict-free coloring of closed neighborhoods"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph and emit a coloring document (JSON)
    Color {
        /// Edge-list file
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Palette multiplier for the randomized stage
        #[arg(long, default_value_t = cfcn_core::DEFAULT_C1)]
        c1: f64,
        /// Write the document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring document against a graph
    Verify {
        /// Edge-list file
        graph: PathBuf,
        /// Coloring document (JSON)
        coloring: PathBuf,
    },
    /// Exact minimum color count, for graphs of at most 12 vertices
    Exact {
        /// Edge-list file
        graph: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_colors: u32,
    },
    /// Emit a generated graph as an edge list
    Gen {
        /// Kind and parameters: `path N`, `cycle N`, `complete N`,
        /// `star LEAVES`, `grid ROWS COLS`, or `gnp N P SEED`
        #[arg(num_args = 1.., required = true)]
        spec: Vec<String>,
        /// Write the edge list here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep benchmark: one CSV row per (graph, seed) run
    Bench {
        /// Near-regular gnp sweep by target degree, e.g. `4,8,16`
        #[arg(long)]
        deltas: Option<String>,
        /// Grid sweep, e.g. `n=200;p=0.02,0.05,0.1`
        #[arg(long)]
        gnp_grid: Option<String>,
        /// Deterministic family sweep: path, cycle, complete, or star
        #[arg(long, requires = "sizes")]
        family: Option<String>,
        /// Sizes for --family, e.g. `100,500,1000`
        #[arg(long, requires = "family")]
        sizes: Option<String>,
        /// Seeds applied to every sweep point, e.g. `1,2,3`
        #[arg(long, default_value = "1")]
        seeds: String,
        #[arg(long, default_value_t = cfcn_core::DEFAULT_C1)]
        c1: f64,
        /// Also run the greedy baseline (fills baseline_colors)
        #[arg(long)]
        baseline: bool,
        /// CSV path; without it the CSV goes to stdout and the summary
        /// moves to stderr
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A command failure carrying its exit code.
pub enum Failure {
    /// Bad input: unreadable files, malformed graphs or documents,
    /// out-of-range parameters. Exit 2.
    Usage(String),
    /// A coloring or an internal consistency check failed. Exit 1.
    Invalid(String),
    /// The randomized stage exhausted its resample budget. Exit 3.
    Budget(String),
}

impl Failure {
    fn exit(&self) -> ExitCode {
        match self {
            Failure::Invalid(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Budget(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<cfcn_core::ParseError> for Failure {
    fn from(e: cfcn_core::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<cfcn_core::PipelineError> for Failure {
    fn from(e: cfcn_core::PipelineError) -> Self {
        match e {
            cfcn_core::PipelineError::Coloring(_) => Failure::Budget(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Color {
            graph,
            seed,
            c1,
            out,
        } => commands::color(&graph, seed, c1, out.as_deref()),
        Command::Verify { graph, coloring } => commands::verify(&graph, &coloring),
        Command::Exact { graph, max_colors } => commands::exact(&graph, max_colors),
        Command::Gen { spec, out } => commands::gen(&spec, out.as_deref()),
        Command::Bench {
            deltas,
            gnp_grid,
            family,
            sizes,
            seeds,
            c1,
            baseline,
            out,
        } => bench::run(bench::Request {
            deltas,
            gnp_grid,
            family,
            sizes,
            seeds,
            c1,
            baseline,
            out,
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.exit()
        }
    }
}

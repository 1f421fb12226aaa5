//! `biclique`: command-line front end for biclique contraction.
//!
//! Exit codes: 0 yes (or success), 1 no, 2 usage or input error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "biclique",
    version,
    about = "Contract a graph to a (balanced) biclique"
)]
struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Fpt,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SourceKind {
    /// Red-blue dominating set, to biclique contraction.
    Rbds,
    /// Hypergraph 2-coloring, to balanced biclique contraction.
    H2c,
    /// Independent set (edge-list input), to biclique contraction.
    Is,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether at most `k` contractions give a biclique.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        balanced: bool,
        #[arg(long, value_enum, default_value = "fpt")]
        engine: Engine,
        /// Write the certificate JSON here on a yes answer.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Include search counters in the report.
        #[arg(long)]
        trace: bool,
        /// Give up after this many search nodes (exit 2).
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        /// Overrides the budget stored in the certificate.
        #[arg(long)]
        budget: Option<usize>,
        /// Check the balanced variant even if the certificate does not say so.
        #[arg(long)]
        balanced: bool,
    },
    /// Shrink a balanced instance with the reduction rules.
    Kernelize {
        graph: PathBuf,
        #[arg(long)]
        budget: usize,
        /// Reduced edge list; the sidecar goes to `<output>.json`.
        #[arg(long)]
        output: PathBuf,
    },
    /// Build a contraction instance from another problem.
    Generate {
        #[arg(value_enum)]
        kind: SourceKind,
        source: PathBuf,
        /// Edge list output; the sidecar goes to `<output>.json`.
        #[arg(long)]
        output: PathBuf,
        /// Independent set size, for `is`.
        #[arg(long)]
        k_is: Option<usize>,
    },
    /// Exhaustive search; prints the smallest budget without `--budget`.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        balanced: bool,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Compare the solver with the oracle on every small connected graph.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let parallel = cli.threads != Some(1);
    let result = match cli.command {
        Command::Solve {
            graph,
            budget,
            balanced,
            engine,
            certificate,
            trace,
            node_limit,
        } => commands::solve(commands::SolveArgs {
            graph,
            budget,
            balanced,
            engine,
            certificate,
            trace,
            node_limit,
            parallel,
        }),
        Command::Verify {
            graph,
            certificate,
            budget,
            balanced,
        } => commands::verify(&graph, &certificate, budget, balanced),
        Command::Kernelize {
            graph,
            budget,
            output,
        } => commands::kernelize(&graph, budget, &output),
        Command::Generate {
            kind,
            source,
            output,
            k_is,
        } => commands::generate(kind, &source, &output, k_is),
        Command::Oracle {
            graph,
            budget,
            balanced,
            certificate,
        } => commands::oracle(&graph, budget, balanced, certificate, parallel),
        Command::Selftest { max_n, max_k } => commands::selftest(max_n, max_k, parallel),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

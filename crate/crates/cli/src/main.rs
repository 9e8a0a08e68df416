//! Command-line front end for the cograph toolkit.

mod commands;
mod formats;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Failures carry the exit code they map to: 1 for usage and capacity
/// problems, 2 for unparseable input files, 3 for internal errors.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Internal(m) => m,
        }
    }

    fn from_core(e: cograph::Error) -> Failure {
        match e {
            cograph::Error::Capacity { .. } | cograph::Error::InvalidConfig { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Internal(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "cograph", version, about = "Cograph recognition, decomposition, and editing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a graph is a cograph; print its cotree or a P4.
    Recognize {
        /// Edge-list file, or `-` for stdin.
        path: String,
    },
    /// Print the modular decomposition tree of a graph as JSON.
    Decompose {
        path: String,
    },
    /// Compute a cograph edit set for a graph.
    Edit {
        path: String,
        /// Editing method: heuristic, exact, or oracle.
        #[arg(long, default_value = "heuristic")]
        method: String,
        /// Write the edit set to this file.
        #[arg(long)]
        out: Option<String>,
        /// Write the merge trace of the edit set to this file as JSON.
        #[arg(long)]
        trace: Option<String>,
    },
    /// Check an edit file against a graph: does it produce a cograph,
    /// and does it preserve the graph's modules?
    Verify {
        graph: String,
        edits: String,
    },
    /// Test whether a graph is a thin or thick spider.
    Spider {
        path: String,
    },
    /// Generate a random cograph, optionally perturbed by edge flips.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_children: usize,
        #[arg(long, default_value_t = 0)]
        flips: usize,
        /// Write the graph to this file instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Benchmark editing methods on seeded perturbed cographs.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        flips: usize,
        /// Comma-separated subset of heuristic, exact, oracle.
        #[arg(long, default_value = "heuristic,exact,oracle")]
        methods: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_children: usize,
        /// Write the CSV report to this file instead of stdout.
        #[arg(long)]
        report: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Recognize { path } => commands::recognize(&path),
        Command::Decompose { path } => commands::decompose(&path),
        Command::Edit {
            path,
            method,
            out,
            trace,
        } => commands::edit(&path, &method, out.as_deref(), trace.as_deref()),
        Command::Verify { graph, edits } => commands::verify(&graph, &edits),
        Command::Spider { path } => commands::spider(&path),
        Command::Generate {
            n,
            seed,
            max_children,
            flips,
            out,
        } => commands::generate(n, seed, max_children, flips, out.as_deref()),
        Command::Bench {
            n,
            trials,
            flips,
            methods,
            seed,
            max_children,
            report,
        } => commands::bench(n, trials, flips, &methods, seed, max_children, report.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

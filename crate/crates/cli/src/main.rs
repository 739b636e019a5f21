//! `rolecolor`: role coloring verification, exact search, the chain-graph
//! 3-role decision and the reduction gadgets from the command line.
//!
//! Exit codes: 0 yes/valid, 1 no/invalid, 2 usage, parse or precondition
//! error, 3 search budget exceeded.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::Failure;

#[derive(Parser, Debug)]
#[command(name = "rolecolor", version, about = "Role colorings of graphs")]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Solver worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for the randomized `harness` subcommand.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a coloring against the k-role definition.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(short = 'k')]
        k: u32,
    },
    /// Print the role graph a coloring induces.
    Rolegraph { graph: PathBuf, coloring: PathBuf },
    /// Decide k-role colorability by exact search.
    Solve {
        graph: PathBuf,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Witness)]
        mode: Mode,
        /// Search-node budget.
        #[arg(long, default_value_t = rolecolor::solver::DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Verify this coloring file as a certificate instead of searching.
        #[arg(long, value_name = "COLORING")]
        check_certificate: Option<PathBuf>,
    },
    /// Decide R-role colorability for a role graph file.
    Rrole {
        graph: PathBuf,
        rolegraph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Witness)]
        mode: Mode,
        #[arg(long, default_value_t = rolecolor::solver::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Polynomial 3-role decision for bipartite chain graphs.
    Chain3 { graph: PathBuf },
    /// Report bipartiteness, chain structure, universal and pendant sets.
    Recognize { graph: PathBuf },
    /// Build a reduction gadget and write it with vertex tags.
    Reduce {
        #[command(subcommand)]
        gadget: Gadget,
        /// Output file; stdout if absent.
        #[arg(short = 'o', long, global = true)]
        output: Option<PathBuf>,
    },
    /// Decide hypergraph k-colorability (no monochromatic hyperedge).
    Hgcolor {
        hypergraph: PathBuf,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Witness)]
        mode: Mode,
        /// Do not require every color to be used.
        #[arg(long)]
        non_surjective: bool,
        #[arg(long, default_value_t = rolecolor::solver::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Randomized agreement check between a reduction (or the chain
    /// decision) and exact search, seeded by `--seed`.
    Harness {
        #[arg(value_enum)]
        check: HarnessCheck,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Role colors for `kpath`.
        #[arg(short = 'k', default_value_t = 5)]
        k: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum Gadget {
    /// Incidence graph with a path `q - b_q - a_q` per vertex (3-role).
    K3 { input: PathBuf },
    /// Incidence graph with a pendant per hyperedge (4-role).
    K4 { input: PathBuf },
    /// Incidence graph with a pendant path per hyperedge (k-role, k >= 5).
    Kpath {
        #[arg(short = 'k', long = "k")]
        k: u32,
        input: PathBuf,
    },
    /// A connected bipartite graph plus a triangle gadget at the pivot.
    Almost {
        #[arg(long)]
        pivot: usize,
        input: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Decision,
    Witness,
    Count,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarnessCheck {
    K3,
    K4,
    Kpath,
    Almost,
    Chain3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            report.emit(cli.json);
            ExitCode::from(if report.answer { 0 } else { 1 })
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(match failure {
                Failure::Budget(_) => 3,
                Failure::Input(_) => 2,
            })
        }
    }
}

//! `minorbit`: regenerates the tables, runs the classifications, computes secant defects and
//! runs the exact verification suites.
//!
//! Exit status: 0 when every check passes, 1 on a mathematical mismatch, 2 on a usage error.

mod commands;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use render::Format;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "minorbit",
    version,
    about = "Minimal nilpotent orbits, secant defects and symmetric pairs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Node numbering used for weights and diagram nodes in input and output.
    #[arg(long, value_enum, global = true, default_value_t = Numbering::Native)]
    pub numbering: Numbering,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Numbering {
    /// The numbering used by the module tables and the data files.
    Native,
    Bourbaki,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableId {
    /// Series of modules whose secant cone fills the module.
    Serial,
    /// Isolated modules with the same property.
    Sporadic,
    /// Pairs whose g1 misses the minimal orbit, with recomputed dimensions.
    Pairs,
    /// Nilpotent orbits in the secant cone of the minimal orbit, and the orbit meeting g1.
    SecantCone,
    /// δ two ways for every small fundamental module.
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckId {
    /// Sampled matrix checks on the classical models.
    Matrix,
    /// G-saturation of the co0-orbit equals the tilde orbit.
    OrbitSaturation,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a table with every entry recomputed and compared with the stored values.
    Tables {
        #[arg(long, value_enum)]
        id: TableId,
        /// Series parameter; values below a row's range are raised to its smallest member.
        #[arg(long)]
        n: Option<i64>,
        /// Algebra for the secant-cone table, e.g. E6, F4, sl6, sp8, so9.
        #[arg(long)]
        g: Option<String>,
        /// Largest rank for the oracle sweep.
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Largest module dimension for the oracle sweep.
        #[arg(long, default_value_t = 300)]
        max_dim: u128,
    },
    /// Families of pairs whose g0 or g1 misses the minimal orbit.
    Classify {
        /// Largest rank of the classical series in the sweep (at most 8).
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        /// Print the black-node evidence for every pair.
        #[arg(long)]
        show_criterion: bool,
    },
    /// Secant defect and related data of one simple module.
    Defect {
        /// Type letter A-G.
        letter: String,
        rank: usize,
        /// Highest weight as comma-separated coefficients of the fundamental weights.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
        /// Largest module dimension to build.
        #[arg(long, default_value_t = minorbit::hwmod::DEFAULT_CAP)]
        cap: usize,
    },
    /// Run the verification suites; nonzero exit on any failure.
    Verify {
        /// `classical` for the default list, or a comma-separated list of pair names.
        #[arg(long, default_value = "classical")]
        pairs: String,
        /// A single pair, e.g. so8-so7; overrides --pairs.
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CheckId::All)]
        check: CheckId,
        /// Where the JSON report goes.
        #[arg(long, default_value = "minorbit-verify.json")]
        report: std::path::PathBuf,
    },
    /// The catalog of symmetric pairs: Satake data, graded dimensions and how O_min meets each piece.
    Catalog {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Dump a module: weights, weight multiplicities and the Chevalley generator matrices.
    Dump {
        letter: String,
        rank: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
        #[arg(long, default_value_t = minorbit::hwmod::DEFAULT_CAP)]
        cap: usize,
    },
}

/// How a command ended.
pub enum Outcome {
    Pass,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match commands::run(&cli, &mut out) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(commands::Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::Failure::Closed) => ExitCode::SUCCESS,
        Err(commands::Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

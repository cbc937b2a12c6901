//! `gcf`: group codes, checkability and reproduction suites from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcf_core::check::{DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_RANDOM_TRIALS, DEFAULT_SEED};
use gcf_core::distance::DEFAULT_DISTANCE_BUDGET;
use gcf_core::{Scope, WeightProfile};

#[derive(Debug, Parser)]
#[command(name = "gcf", version, about = "Group codes and checkability in group algebras over finite fields")]
pub struct Cli {
    /// Worker threads for distance enumeration and verification (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Master seed for every randomized stage.
    #[arg(long, global = true, env = "GCF_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Default)]
pub struct GroupSource {
    /// Named group, e.g. s3, d24, ea(2,3), product(c6,c12), g48.
    #[arg(long, visible_alias = "group", conflicts_with = "presentation")]
    pub preset: Option<String>,
    /// File holding a presentation `<gens | relations>`.
    #[arg(long)]
    pub presentation: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub group: GroupSource,
    /// Field spec such as GF(3), GF(4) or GF(4)[1,1,1].
    #[arg(long, default_value = "GF(2)")]
    pub field: String,
}

#[derive(Debug, Args, Clone)]
pub struct PrincipalityArgs {
    /// Largest number of candidate generators tried exhaustively.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
    pub exhaustive_budget: u128,
    /// Random generator trials when exhaustion is out of budget.
    #[arg(long, default_value_t = DEFAULT_RANDOM_TRIALS)]
    pub random_trials: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a group and report its order, generators and element orders.
    Group {
        #[command(flatten)]
        group: GroupSource,
        /// Write the multiplication table dump to this file.
        #[arg(long)]
        group_out: Option<PathBuf>,
    },
    /// Build codes and compute their parameters.
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Row reduction and nullspaces of matrix files.
    Matrix {
        #[command(subcommand)]
        command: MatrixCommand,
    },
    /// Decide whether a right ideal is checkable.
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Code file holding the ideal.
        #[arg(long, conflicts_with = "element")]
        code: Option<PathBuf>,
        /// Use the right ideal generated by this element.
        #[arg(long, required_unless_present = "code")]
        element: Option<String>,
        #[command(flatten)]
        principality: PrincipalityArgs,
    },
    /// Evaluate the code-checkable predicate for KG.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Principality and checkability of the radical powers of F_p(C_p^m).
    RmExperiment {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        m: u32,
        #[command(flatten)]
        principality: PrincipalityArgs,
    },
    /// Random search over checkable codes (vKG)^⊥.
    Search {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = DEFAULT_RANDOM_TRIALS)]
        trials: u64,
        /// `uniform` or `sparse:<w>`.
        #[arg(long, default_value = "uniform")]
        profile: WeightProfile,
        /// Codeword budget per distance computation.
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
        /// Write all records here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record format for --out (default: from the file extension).
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Record wall-clock time per trial (makes exports non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Search for a right ideal that is provably not checkable.
    Witness {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = DEFAULT_RANDOM_TRIALS)]
        trials: u64,
        #[command(flatten)]
        principality: PrincipalityArgs,
    },
    /// Search F2·D24 for a self-dual [24,12,8] principal ideal.
    Golay {
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
    },
    /// Run the reproduction suites and report each claim.
    Verify {
        /// all, groups, codes, klein-pair, reed-muller, classification or golay.
        #[arg(default_value = "all")]
        scope: Scope,
        /// Random ideals sampled per code-checkable catalog entry.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1_000_000)]
        golay_trials: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CodeCommand {
    /// Right (or left) ideal generated by one element, written as a code file.
    Principal {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// [n,k,d] of a code file.
    Params {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
    },
    /// Dual of a code file.
    Dual {
        #[command(flatten)]
        group: GroupSource,
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance of a code file.
    Distance {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
        /// Stop once a codeword of weight at most this is found.
        #[arg(long)]
        early_stop: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MatrixCommand {
    /// Reduced row echelon form and rank.
    Rref {
        #[arg(long)]
        matrix_in: PathBuf,
        #[arg(long)]
        matrix_out: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Basis of the right nullspace.
    Nullspace {
        #[arg(long)]
        matrix_in: PathBuf,
        #[arg(long)]
        matrix_out: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "granulab",
    version,
    about = "Linguistic uncertainty calculi: T-norms over fuzzy term sets"
)]
pub struct Cli {
    /// JSON file with default weights, tie-break, resolution and term set.
    #[arg(long, global = true, env = "GRANULAB_CONFIG", value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect the built-in term sets or a term-set file.
    #[command(subcommand)]
    Termset(TermsetCommand),
    /// Apply a T-norm to two labels, two 4-tuples, or two scalars.
    Eval(EvalArgs),
    /// Closure table of one T-norm over a term set.
    Closure(ClosureArgs),
    /// Count the cells on which two closure tables differ.
    Compare(CompareArgs),
    /// Group T-norms into equivalence classes at a threshold.
    Classes(ClassesArgs),
    /// Run a full closure experiment and write every table.
    Experiment(ExperimentArgs),
    /// Check the T-norm axioms, its dual T-conorm and their duality on a grid.
    Axioms(AxiomsArgs),
}

#[derive(Debug, Subcommand)]
pub enum TermsetCommand {
    /// List the built-in term sets.
    List,
    /// Print the terms of a term set, or plot them.
    Show {
        /// Built-in name (L1, L2, L3) or path to a JSON file.
        name: String,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Approx {
    /// Built-in name (L1, L2, L3) or path to a JSON term-set file.
    #[arg(long, value_name = "NAME|PATH")]
    pub termset: Option<String>,
    /// Centroid and area weights of the approximation distance.
    #[arg(long, value_name = "WC,WA")]
    pub weights: Option<String>,
    /// Number of alpha levels used by the extension principle.
    #[arg(long, value_name = "N")]
    pub resolution: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// T-norm selector, e.g. T2 or "Tsc(p=-0.5)".
    pub selector: String,
    /// Term labels or 4-tuples such as 0.4,0.6,0.1,0.1.
    #[arg(num_args = 0..=2, value_name = "ARG")]
    pub args: Vec<String>,
    /// Evaluate on two numbers in [0, 1] instead of fuzzy arguments.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, conflicts_with = "args")]
    pub scalar: Option<Vec<f64>>,
    #[command(flatten)]
    pub approx: Approx,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[arg(long, value_name = "SELECTOR")]
    pub tnorm: String,
    #[command(flatten)]
    pub approx: Approx,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Exactly two T-norm selectors.
    #[arg(long, value_name = "SELECTOR", num_args = 1, required = true)]
    pub tnorm: Vec<String>,
    #[command(flatten)]
    pub approx: Approx,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    /// T-norm selectors in nondecreasing order; defaults to the nine
    /// selectors of the experiment preset.
    #[arg(long, value_name = "SELECTOR")]
    pub tnorm: Vec<String>,
    /// Tolerated fraction of differing cells, as 0.155 or 15.5%.
    #[arg(long, value_name = "P")]
    pub threshold: String,
    #[command(flatten)]
    pub approx: Approx,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value = "paper")]
    pub preset: String,
    /// Centroid and area weights of the approximation distance.
    #[arg(long, value_name = "WC,WA")]
    pub weights: Option<String>,
    #[arg(long, value_name = "N")]
    pub resolution: Option<usize>,
    /// Output directory.
    #[arg(long, value_name = "DIR", default_value = "experiment-report")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    pub selector: String,
    /// Points per axis of the check lattice (at least 3).
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    /// Largest tolerated monotonicity, associativity or duality error.
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
    #[command(flatten)]
    pub output: Output,
}

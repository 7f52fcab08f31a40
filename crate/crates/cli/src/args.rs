use std::num::NonZeroU64;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mwbis_core::lp::DEFAULT_CLIQUE_CAP;

#[derive(Debug, Parser)]
#[command(
    name = "mwbis",
    version,
    about = "Budgeted independent set solvers and experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance and print a JSON record.
    Solve(SolveArgs),
    /// Write a generated instance in graph format.
    Generate(GenerateArgs),
    /// Check the clique reduction on random regular graphs, one JSON record per trial.
    VerifyReduction(VerifyArgs),
    /// Compare methods against the exact optimum over a corpus and write CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Exact,
    Greedy,
    Color,
    Lp,
    Truncate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColoringKind {
    /// Greedy coloring in vertex order, at most max degree + 1 colors.
    Natural,
    /// Greedy coloring in reverse peeling order, at most degeneracy + 1 colors.
    Degeneracy,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph file, or `-` for standard input.
    #[arg(short, long)]
    pub input: PathBuf,
    /// Budget: the most vertices a solution may contain.
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = SolveMethod::Exact)]
    pub method: SolveMethod,
    /// Branch-and-bound node cap for `exact`.
    #[arg(long)]
    pub node_limit: Option<NonZeroU64>,
    /// Wall-clock cap for `exact`, in milliseconds.
    #[arg(long)]
    pub time_limit_ms: Option<NonZeroU64>,
    /// Coloring used by `color`.
    #[arg(long, value_enum, default_value_t = ColoringKind::Natural)]
    pub coloring: ColoringKind,
    /// Also write the LP relaxation in CPLEX LP format to this path.
    #[arg(long)]
    pub lp_dump: Option<PathBuf>,
    /// Independent set to truncate (1-based, comma separated); needed by `truncate` on
    /// non-bipartite graphs.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<usize>>,
    /// Give up on the LP when the graph has more maximal cliques than this.
    #[arg(long, default_value_t = DEFAULT_CLIQUE_CAP)]
    pub clique_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// The instance on which the bipartite greedy is tight.
    Tight,
    /// The integrality-gap instance for the clique LP.
    Gap,
    /// Random r-regular graph.
    Regular,
    /// Random bipartite graph.
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeightKind {
    Degree,
    Uniform,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Budget parameter for `tight` and `gap`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Hub degree for `tight`.
    #[arg(long)]
    pub x: Option<usize>,
    /// Vertex count for `regular`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree for `regular`.
    #[arg(long)]
    pub r: Option<usize>,
    /// Side A size for `bipartite`.
    #[arg(long)]
    pub n_a: Option<usize>,
    /// Side B size for `bipartite`.
    #[arg(long)]
    pub n_b: Option<usize>,
    /// Edge probability for `bipartite`.
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    /// Weights for `bipartite`: degrees, or uniform on [1, 10).
    #[arg(long, value_enum, default_value_t = WeightKind::Degree)]
    pub weights: WeightKind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Source vertex count; the source graphs are (n-4)-regular.
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    /// Clique size.
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 20)]
    pub trials: u64,
    /// Trial `t` uses seed `seed + t`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Corpus {
    /// Seeded random bipartite instances, every budget from 1 to n.
    Bipartite,
    /// Tight family over k in {2,4,6,8} and x in {5,10,50}.
    Tight,
    /// Integrality-gap family for k from 2 to 5.
    Gap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum BenchMethod {
    Greedy,
    Color,
    Truncate,
    Lp,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub corpus: Corpus,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "greedy")]
    pub methods: Vec<BenchMethod>,
    /// Instances in the `bipartite` corpus.
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Single budget for the `bipartite` corpus instead of every k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Branch-and-bound node cap for the exact reference.
    #[arg(long)]
    pub node_limit: Option<NonZeroU64>,
    /// CSV path; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

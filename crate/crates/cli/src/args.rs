use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "weylkit", version, about = "Ext groups between Weyl modules of Schur algebras over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ext^i(Δ(λ), M) for M = Δ(μ) or L(μ), i = 0..max-degree.
    Ext(ExtArgs),
    /// Compare Ext dimensions before and after the shift λ ↦ λ⁺, μ ↦ μ⁺.
    Verify(VerifyArgs),
    /// Sweep all pairs λ ⊴ μ in a range and write one JSON record per line.
    Survey(SurveyArgs),
    /// Express a tableau class in the semistandard basis of Δ(μ).
    Straighten(StraightenArgs),
    /// Gram matrix of the contravariant form on a weight space of Δ(μ).
    Gram(WeightArgs),
    /// Number of semistandard tableaux of shape μ and weight α.
    Kostka(KostkaArgs),
    /// dim L(μ)_α.
    #[command(name = "p-kostka")]
    PKostka(WeightArgs),
    /// The product ξ_ω ξ_π in the Schur algebra.
    #[command(name = "schur-mul")]
    SchurMul(SchurMulArgs),
    /// Summands of the chain resolution of Δ(λ), degree by degree.
    #[command(name = "resolve-info")]
    ResolveInfo(ResolveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Weyl,
    Simple,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    /// Directory of cached result records.
    #[arg(long, env = "WEYLKIT_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Recompute cached records and fail if they differ.
    #[arg(long)]
    pub recheck: bool,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub p: u64,
    /// Partition λ, e.g. 8,3.
    #[arg(long)]
    pub lambda: String,
    /// Partition μ of the same size.
    #[arg(long)]
    pub mu: String,
    /// Number of parts; defaults to the longer of λ and μ.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub max_degree: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ExtArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_enum, default_value_t = TargetArg::Weyl)]
    pub target: TargetArg,
    /// Also record the periodicity hypotheses for this shift exponent.
    #[arg(long)]
    pub d: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// 1.1.1 | 1.1.2 | 6.1 | 6.4, or weyl-periodicity | simple-periodicity | hom-bound | hook-bound.
    #[arg(long)]
    pub theorem: String,
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, default_value_t = 1)]
    pub d: u32,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SurveyArgs {
    /// Primes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p: Vec<u64>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub r_min: u32,
    #[arg(long)]
    pub r_max: u32,
    #[arg(long, value_enum, default_value_t = TargetArg::Weyl)]
    pub target: TargetArg,
    #[arg(long, default_value_t = 2)]
    pub max_degree: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Clone, Args)]
pub struct StraightenArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub mu: String,
    /// Rows separated by '/', entries by ',', e.g. 1,2/2,2.
    #[arg(long)]
    pub tableau: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub mu: String,
    /// Weight α, a composition of |μ|.
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct KostkaArgs {
    #[arg(long)]
    pub mu: String,
    #[arg(long)]
    pub alpha: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SchurMulArgs {
    #[arg(long)]
    pub p: u64,
    /// Matrix rows separated by '/', e.g. 1,1/0,0.
    #[arg(long)]
    pub omega: String,
    #[arg(long)]
    pub pi: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ResolveArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Last degree to list; defaults to the length of the resolution.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

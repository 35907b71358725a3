use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "edgebetti",
    version,
    about = "Betti tables of binomial edge ideals and their initial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for the oracles; never changes the output.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti diagram of S/J_G, S/in(J_G), or both.
    Betti(BettiArgs),
    /// Compare the extremal Betti numbers of S/J_G and S/in(J_G).
    Conjecture(ConjectureArgs),
    /// Check that the admissible-path basis (or a given basis) is a reduced Gröbner basis.
    VerifyGb(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Cycle,
    Kmn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Initial,
    Binomial,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    MappingCone,
    Lcm,
    Koszul,
}

#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,

    /// Cycle length, or the second part size of K_{m,n}.
    #[arg(long)]
    pub n: Option<usize>,

    /// First part size of K_{m,n}.
    #[arg(long)]
    pub m: Option<usize>,

    /// Graph file: vertex count on the first line, then one `u v` edge per line.
    #[arg(long, conflicts_with = "family")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Prime coefficient field for homology.
    #[arg(long, default_value_t = 32003)]
    pub field: u64,

    /// Column cap for any single matrix.
    #[arg(long)]
    pub caps: Option<usize>,

    /// Restrict the Koszul oracle to i <= i_max.
    #[arg(long)]
    pub i_max: Option<usize>,

    /// Restrict the Koszul oracle to j <= j_max.
    #[arg(long)]
    pub j_max: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub graph: GraphSource,

    #[arg(long, value_enum, default_value_t = Side::Initial)]
    pub side: Side,

    /// Defaults to lcm for the initial side and koszul for the binomial side.
    #[arg(long, value_enum)]
    pub method: Option<Method>,

    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub graph: GraphSource,

    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphSource,

    /// Candidate basis file, one `lead - trail` binomial per line.
    #[arg(long)]
    pub basis: Option<PathBuf>,

    /// Refuse when more S-pairs than this would be checked.
    #[arg(long)]
    pub pair_cap: Option<usize>,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "zlab", version, about = "Bipartite recurrent quivers, their T-systems and twists")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the payload to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps that allow it.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build one catalog bigraph or list the catalog.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Recurrence, labeling regime, Perron data and Kac quadruple of a bigraph.
    Classify(InArg),
    /// Run the T-system of a bigraph.
    Evolve(EvolveArgs),
    /// Classify the growth of a `t,vertex,value` series.
    Growth(GrowthArgs),
    /// Twist quivers: factorization, Devron and conserved quantities.
    #[command(subcommand)]
    Twist(TwistCmd),
    /// Swap red and blue.
    Dual(InArg),
    /// Decide isomorphism of two bigraphs.
    Isocheck(IsoArgs),
}

#[derive(Debug, Args)]
pub struct InArg {
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct IsoArgs {
    /// Two bigraph files.
    #[arg(long = "in", num_args = 2, required = true)]
    pub inputs: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    Build {
        /// Family number, with an optional `#` and a trailing `*` for the dual listing.
        #[arg(long)]
        family: String,
        /// Integers, or affine type names (`AffA3`, `Ê6`) standing for their two-number code.
        #[arg(long, value_delimiter = ',')]
        params: Vec<String>,
        #[arg(long)]
        dual: bool,
    },
    List {
        #[arg(long, default_value_t = 22)]
        max_vertices: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symbolic,
    Tropical,
    Numeric,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Numeric)]
    pub mode: Mode,
    #[arg(long, default_value_t = 16)]
    pub steps: usize,
    /// `ones`, `perron`, `random` or a JSON file holding one value per vertex
    /// (numbers, or strings such as "3/2" for exact tropical runs).
    #[arg(long, default_value = "ones")]
    pub init: String,
    /// Seed for `--init random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Transform {
    /// Values are already `log T`.
    None,
    /// Take logarithms first.
    Ln,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Transform::None)]
    pub transform: Transform,
    /// State revisit tolerance.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, default_value_t = 0.02)]
    pub sd_threshold: f64,
    #[arg(long, default_value_t = 0.5)]
    pub window_fraction: f64,
    #[arg(long, default_value_t = 64)]
    pub min_len: usize,
}

#[derive(Debug, Subcommand)]
pub enum TwistCmd {
    /// Check the product formula along a τ-sequence.
    Verify {
        #[arg(long)]
        quiver: PathBuf,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
    },
    Devron {
        #[arg(long)]
        quiver: PathBuf,
    },
    Conserved {
        /// Affine type such as `E6`, `Ê6`, `D̂4` or `AffA3`; a finite name means its extension.
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = zlab_twist::DEFAULT_TOL)]
        tol: f64,
    },
}

//! Command-line definitions.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use sumbasis_core::limits::{DEFAULT_DENSE_WIDTH_CAP, DEFAULT_PROFILE_BUDGET};

pub const CACHE_DIR_ENV: &str = "SUMBASIS_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".sumbasis-cache";

#[derive(Parser, Debug)]
#[command(
    name = "sumbasis",
    version,
    about = "h-fold sumsets: interval structure, spectra, extremal searches, separation checks, and verified constructions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Cache directory (flag wins over SUMBASIS_CACHE_DIR, which wins over
    /// ./.sumbasis-cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Disable the result cache entirely.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Evaluation budget: candidate sets examined across this run.
    #[arg(long, global = true, default_value_t = DEFAULT_PROFILE_BUDGET)]
    pub budget: u64,

    /// Widest dense bitmask the sumset kernel may allocate, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_DENSE_WIDTH_CAP)]
    pub dense_width_cap: u64,

    /// Worker threads for partitioned enumerations (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroundArg {
    /// Nonnegative integers.
    N0,
    /// All integers (requires --window).
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    N,
    #[value(alias = "n_sharp", alias = "nsharp")]
    NSharp,
    M,
    #[value(alias = "m_sharp", alias = "msharp")]
    MSharp,
    #[value(alias = "k_dual", alias = "kdual")]
    KDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Sums of exactly h elements, multiset reading.
    Bh,
    /// Every fold up to --level plus cross-fold separation.
    Level,
    /// All subset sums pairwise separated.
    Subset,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute an h-fold sumset with its run structure and statistics.
    Sumset {
        /// Set literal, e.g. "{0,1,3}".
        set: String,
        #[arg(long)]
        h: u32,
    },
    /// Report just the two interval statistics of an h-fold sumset.
    Ell {
        set: String,
        #[arg(long)]
        h: u32,
    },
    /// Enumerate an achievable-statistic spectrum.
    Spectrum {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = GroundArg::N0)]
        ground: GroundArg,
        /// Signed window "lo:hi" (ground z only).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Collect best-run lengths instead of initial-run lengths.
        #[arg(long)]
        sharp: bool,
        /// Element bound for --sharp.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Compute one extremal function value with witness and certificate.
    Extremal {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        h: u32,
        /// Set size (kinds n, n-sharp, m, m-sharp).
        #[arg(long)]
        k: Option<u32>,
        /// Target interval endpoint (kind k-dual).
        #[arg(long)]
        n: Option<i64>,
        /// Explored element bound (kinds n-sharp, m-sharp).
        #[arg(long)]
        max_element: Option<i64>,
        /// Signed window "lo:hi" (kind m).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Build an interval 2-basis and emit set plus certificate.
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        /// Also write the set and certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a stored construction file.
    Verify { file: PathBuf },
    /// Run a separation check on a set.
    Separated {
        set: String,
        #[arg(long)]
        delta: i64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Fold count for --mode bh.
        #[arg(long)]
        h: Option<u32>,
        /// Level cap for --mode level.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Recompute the bundled reference spectra and diff against them.
    Tables {
        /// Restrict to one h.
        #[arg(long)]
        h: Option<u32>,
        /// Override the bundled expectations with a JSON file
        /// [{"h":3,"k":3,"spectrum":"{0, 3, 6, 7}"}, ...].
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "eulerzeta", version, about = "Accelerated series for zeta values, Catalan's constant and alternating sums")]
pub struct Cli {
    /// Precision of the result in bits
    #[arg(long, global = true, default_value_t = 128)]
    pub prec: usize,
    /// Target absolute error, as a decimal
    #[arg(long, global = true, default_value = "1e-30")]
    pub eps: String,
    /// Term budget for each series
    #[arg(long = "max-terms", global = true, default_value_t = 10_000)]
    pub max_terms: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// JSON file of reference constants reused across runs
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Riemann zeta(k) for k >= 2
    Zeta { k: u32 },
    /// Alternating zeta (Dirichlet eta) at k >= 0
    Zetahat { k: u32 },
    /// Catalan's constant
    Catalan,
    /// Alternating sum of (-1)^j/(mj+i)^k
    M { m: u64, i: u64, k: u32 },
    /// Hurwitz zeta(k, i/m)
    Hurwitz { k: u32, i: u64, m: u64 },
    /// Iterated harmonic number H_n^(k)
    Harmonic {
        n: usize,
        k: usize,
        /// Print the exact rational
        #[arg(long)]
        exact: bool,
    },
    /// Term-by-term convergence table as CSV
    Table {
        what: TableKind,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// auto, none, pi, ln2, catalan, zeta<K> or eta<K>
        #[arg(long, default_value = "auto")]
        reference: String,
    },
    /// Terms needed by the accelerated and the plain alternating series
    Bench {
        /// zetahat-K, zeta-K, catalan or m-M-I-K
        what: String,
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Run the identity checks
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Zeta,
    Zetahat,
    Catalan,
    M,
    NaiveM,
}

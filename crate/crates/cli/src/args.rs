//! Command-line argument definitions.

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    /// Plain "index value" lines, one per term, for integer sequences.
    Bfile,
}

#[derive(Debug, Parser)]
#[command(
    name = "delannoy",
    version,
    about = "Exact lattice-path enumeration: Delannoy arrays, Schroeder paths, ballot numbers, ruin durations",
    after_help = "Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification mismatch."
)]
pub struct Cli {
    /// Output format (bfile only applies to integer-sequence commands)
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Delannoy array D(n, k) for n < COLS, k < ROWS
    Table {
        rows: usize,
        cols: usize,
    },
    /// Print the central sequence d_0 .. d_N
    Central {
        n: usize,
        /// One of: dp, sum, rec, series, legendre, all
        #[arg(long, default_value = "dp")]
        algorithm: String,
    },
    /// Print the large Schroeder numbers s_0 .. s_N
    Schroeder {
        n: usize,
    },
    /// Count paths of a class for a jump system
    Walks {
        /// One of: walk, bridge, meander, excursion
        #[arg(long)]
        class: String,
        /// Jump list "t:dh,t:dh,..." with time length t >= 1
        #[arg(long)]
        jumps: String,
        /// Total time length the jumps must tile exactly
        #[arg(long)]
        length: usize,
        /// Required final height
        #[arg(long)]
        end: Option<i64>,
        /// Strip floor (must be <= 0)
        #[arg(long)]
        lower: Option<i64>,
        /// Strip ceiling (must be >= 0)
        #[arg(long)]
        upper: Option<i64>,
    },
    /// Ballot number T(x, y) for x minority / y majority steps
    Ballot {
        x: usize,
        y: usize,
    },
    /// Count +-1 paths of length N from 0, never below 0, ending at K
    DyckPrefix {
        n: usize,
        k: usize,
    },
    /// Exact ruin-time distribution in the strip [-N, N]
    Ruin {
        n: u32,
        /// Last round to report
        #[arg(long)]
        horizon: u64,
        /// One of: dp, binomial, trig, all
        #[arg(long, default_value = "dp")]
        method: String,
    },
    /// Exact expected absolute lead after 2N fair games
    Lead {
        n: u64,
    },
    /// Growth expansion of the central sequence at each N
    Asym {
        #[arg(required = true)]
        n: Vec<u64>,
        /// Number of expansion terms (1..=3)
        #[arg(long, default_value_t = 3, conflicts_with = "profile")]
        terms: u8,
        /// Report the three-term form against the exact values, with
        /// relative errors
        #[arg(long)]
        profile: bool,
    },
    /// Re-check a built-in identity; exits 3 on mismatch
    Verify {
        /// One of: gf-central, schroeder-algebraic, bridge-decomposition,
        /// p-recurrence, legendre, square-identity, ruin-agreement,
        /// ballot-oracle
        identity: String,
        /// Order / range to check (default depends on the identity)
        #[arg(long)]
        order: Option<u64>,
    },
    /// Time one central-sequence algorithm; output includes a value digest
    Bench {
        /// One of: central-dp, central-sum, central-rec, central-series
        target: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        repetitions: u32,
    },
}

//! Command-line front end for `orderstat`: correlation tables, exact
//! verification sweeps, proof-inequality scans and distribution exploration,
//! reported as CSV or JSON.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use orderstat::dist::mc::McConfig;
use orderstat::dist::DistRegistry;

pub mod commands;
pub mod document;
pub mod error;

use commands::{ExploreMethod, GridMaxima, IndexRange, VerifyTarget};
pub use document::{Cell, Format, ReportDocument, Summary};
pub use error::CliError;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "orderstat",
    version,
    about = "Correlations of order statistics: tables, checks and scans"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for Monte Carlo runs and random lemma cases.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    /// Samples per batch; defaults to 1% of --samples.
    #[arg(long)]
    pub batch_size: Option<u64>,
}

impl McArgs {
    fn config(&self, seed: u64) -> McConfig {
        let mut cfg = McConfig::new(self.samples, seed);
        if let Some(b) = self.batch_size {
            cfg.batch_size = b;
        }
        cfg
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// h(k) and rho(k) for one sample size.
    Table {
        #[arg(long, required_unless_present = "gold")]
        n: Option<usize>,
        /// Lag; every t in 1..n-1 when omitted.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value = "exp")]
        dist: String,
        /// Decimal places (round half away from zero).
        #[arg(long, default_value_t = 3)]
        precision: usize,
        /// Regenerate the reference fixtures into this directory instead.
        #[arg(long, value_name = "DIR", conflicts_with_all = ["n", "t"])]
        gold: Option<PathBuf>,
    },
    /// Run an exact verifier over a range of sample sizes.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        /// Random cases for `lemma`.
        #[arg(long, default_value_t = 10_000)]
        cases: u64,
    },
    /// Positivity scan of a proof inequality on an integer grid.
    Proofcheck {
        /// I3-even, I3-odd, I10-even, I10-odd or P19.
        id: String,
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long)]
        t_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        x_max: Option<i64>,
    },
    /// Peak location and uniform comparison for any distribution.
    Explore {
        #[arg(long)]
        dist: String,
        /// Inclusive, e.g. 3..8.
        #[arg(long, default_value = "3..8")]
        n: IndexRange,
        /// Inclusive; all lags when omitted.
        #[arg(long)]
        t: Option<IndexRange>,
        #[arg(long, value_enum, default_value = "quad")]
        method: ExploreMethod,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Monte Carlo estimate of one correlation.
    Mc {
        #[arg(long)]
        dist: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        mc: McArgs,
    },
}

/// Run one parsed command to a report document.
pub fn run(cli: &Cli) -> Result<ReportDocument, CliError> {
    let registry = DistRegistry::with_builtins();
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Table { gold: Some(dir), .. } => commands::gold(dir),
        Command::Table {
            n, t, dist, precision, ..
        } => commands::table(&registry, n.expect("clap requires --n"), *t, dist, *precision),
        Command::Verify {
            target,
            n_max,
            n_min,
            cases,
        } => commands::verify(*target, *n_min, *n_max, *cases, seed),
        Command::Proofcheck {
            id,
            m_max,
            t_max,
            k_max,
            x_max,
        } => commands::proofcheck(
            id,
            GridMaxima {
                m: *m_max,
                t: *t_max,
                k: *k_max,
                x: *x_max,
            },
        ),
        Command::Explore { dist, n, t, method, mc } => {
            commands::explore(&registry, dist, *n, *t, *method, mc.config(seed))
        }
        Command::Mc { dist, n, k, t, mc } => commands::mc(&registry, dist, *n, *k, *t, mc.config(seed)),
    }
}

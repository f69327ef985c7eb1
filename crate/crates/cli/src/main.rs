//! `osp`: unitarity, characters and Verma-module checks for osp(1|2n) from the command line.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "osp", version, about = "Positive-energy lowest-weight UIRs of osp(1|2n,R), computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (the default depends on the command).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// A signature [d; a_1, ..., a_{n-1}].
#[derive(Debug, Clone, Args)]
pub struct SigArgs {
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Comma-separated labels a_1..a_{n-1} (default all zero).
    #[arg(long)]
    pub a: Option<String>,
    /// Conformal weight as an exact rational, e.g. 3/2.
    #[arg(long, allow_hyphen_values = true)]
    pub d: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide unitarity of one signature.
    Classify(SigArgs),
    /// Unitarity over a grid of labels and d = k/den.
    Grid {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest label value, each a_k ranging over 0..=a-max.
        #[arg(long, default_value_t = 3)]
        a_max: u32,
        /// Largest numerator k.
        #[arg(long, default_value_t = 20)]
        kmax: i64,
        #[arg(long, default_value_t = 4)]
        den: i64,
    },
    /// Reduction points d_ij, d_i, d_ii of a signature.
    ReductionPoints {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        a: Option<String>,
    },
    /// Character series: verma, sl3, weyl, or one of d1, d12, d2eq13, d2, d23.
    Character {
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = osp_core::characters::DEFAULT_MAXDEG)]
        maxdeg: u32,
        #[arg(long, default_value_t = 1)]
        m1: u32,
        #[arg(long, default_value_t = 2)]
        m2: u32,
        /// Dynkin labels of a dominant weight, for `--case weyl`.
        #[arg(long)]
        labels: Option<String>,
    },
    /// Check the printed rank-3 vectors against the engine.
    Verify {
        /// Every printed vector at every sample of its regime.
        #[arg(long)]
        all: bool,
        /// One vector id, e.g. sv_d2 or compact_1.
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
    /// Positive semidefiniteness of the contravariant form, level by level.
    Gram {
        #[command(flatten)]
        sig: SigArgs,
        #[arg(long, default_value_t = osp_core::enveloping::gram::DEFAULT_MAX_LEVEL)]
        max_level: usize,
        /// Dump the Gram matrix at this offset (simple-root coefficients) instead.
        #[arg(long)]
        offset: Option<String>,
    },
    /// Dot-action orbit of a weight given by Dynkin labels.
    Multiplet {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        labels: String,
    },
    /// Weyl group elements, a single word, or w_Λ for given labels.
    Weyl {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// A word such as s1s2s3.
        #[arg(long)]
        word: Option<String>,
        /// Dynkin labels; reports w and the dominant Λ0 with w·Λ0 = Λ.
        #[arg(long, allow_hyphen_values = true)]
        labels: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("osp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

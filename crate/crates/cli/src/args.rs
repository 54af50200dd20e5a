use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(
    name = "mh",
    version,
    about = "Orbits of integral points on x1^2+...+xn^2 - a x1...xn = k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

/// A point given as comma-separated integers, e.g. `3,3,6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointArg(pub Vec<BigInt>);

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<BigInt>()
                    .map_err(|_| format!("{part:?} is not an integer"))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PointArg)
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Coefficient of the product term (nonzero).
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: BigInt,
    /// Level.
    #[arg(long = "k", allow_hyphen_values = true)]
    pub k: BigInt,
    /// Number of variables (at least 3).
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for enumeration (0 uses every core).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a point to its fundamental-domain representative.
    Reduce {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        point: PointArg,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: usize,
    },
    /// Decide whether two points share an orbit and print a witness word.
    Equiv {
        #[command(flatten)]
        common: Common,
        /// Pass exactly twice.
        #[arg(long, allow_hyphen_values = true, required = true)]
        point: Vec<PointArg>,
    },
    /// All normal-form solutions up to a height bound.
    Solve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        height_max: u64,
    },
    /// Fundamental-domain members, with infinite families as descriptors.
    Fd {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        cap: u64,
    },
    /// Orbit partition of the bounded solution set.
    Orbits {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        height_max: u64,
    },
    /// Bounded orbit graph.
    Graph {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        height_max: u64,
    },
    /// Brute-force check of the fundamental domain plus the Markoff comparison.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        height_max: u64,
        /// Random samples for the algebraic identity checks.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Reduce { common, .. }
            | Command::Equiv { common, .. }
            | Command::Solve { common, .. }
            | Command::Fd { common, .. }
            | Command::Orbits { common, .. }
            | Command::Graph { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Reduce { .. } => "reduce",
            Command::Equiv { .. } => "equiv",
            Command::Solve { .. } => "solve",
            Command::Fd { .. } => "fd",
            Command::Orbits { .. } => "orbits",
            Command::Graph { .. } => "graph",
            Command::Verify { .. } => "verify",
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use genusfield::cli::{self, Command, JobConfig, OutputFormat};
use genusfield::polyring::DEFAULT_SEED;
use genusfield::sweep::SweepBounds;

/// Genus fields and extended genus fields of elementary abelian l-extensions
/// of F_q(T).
#[derive(Parser)]
#[command(name = "genusfield", version, about)]
struct Args {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Clone)]
struct SpecInput {
    /// Path to a JSON spec file
    #[arg(long, conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// Inline JSON spec
    #[arg(long)]
    inline: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed for the factorization randomness (outputs are seed-invariant)
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Replace dependent generators by a computed basis instead of rejecting
    #[arg(long)]
    reduce: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the genus field report for one spec
    Compute {
        #[command(flatten)]
        spec: SpecInput,
    },
    /// Run the independent oracles against one spec
    Verify {
        #[command(flatten)]
        spec: SpecInput,
        /// Compare the recomputed report against a stored report file
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Enumerate and verify every valid spec within bounds
    Sweep {
        /// Field sizes q (prime powers), comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        /// Kummer exponents l (primes), comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<u64>,
        /// Maximum degree of each radicand D
        #[arg(long)]
        max_deg: usize,
        /// Maximum degree of the irreducible factors (defaults to max-deg)
        #[arg(long)]
        max_factor_deg: Option<usize>,
        /// Maximum number of generators m
        #[arg(long, default_value_t = 1)]
        max_m: usize,
        /// Seed for the factorization randomness
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = match args.command {
        Cmd::Compute { spec } => JobConfig {
            command: Command::Compute,
            input: spec.input,
            inline: spec.inline,
            format: match spec.format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            },
            seed: spec.seed,
            reduce: spec.reduce,
        },
        Cmd::Verify { spec, expect } => JobConfig {
            command: Command::Verify { expect },
            input: spec.input,
            inline: spec.inline,
            format: match spec.format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            },
            seed: spec.seed,
            reduce: spec.reduce,
        },
        Cmd::Sweep {
            q,
            l,
            max_deg,
            max_factor_deg,
            max_m,
            seed,
        } => JobConfig {
            command: Command::Sweep(SweepBounds {
                q,
                l,
                max_deg,
                max_factor_deg,
                max_m,
            }),
            input: None,
            inline: None,
            format: OutputFormat::Json,
            seed,
            reduce: false,
        },
    };
    let code = cli::run(&config, &mut std::io::stdout());
    ExitCode::from(code as u8)
}

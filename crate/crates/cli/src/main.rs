//! Command-line front end: series expansion, verification suites,
//! certificate emission, and table caching. This is the only layer with
//! I/O side effects; all verification work happens in the core library.
//!
//! Exit codes: 0 = all checks passed, 1 = a counterexample or failed claim,
//! 2 = usage error, 3 = precision/horizon failure.

mod output;
mod suites;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use triadic_core::modeq::Side;
use triadic_core::theta::{named_series, SeriesName};
use triadic_core::{CoreError, SeriesJson};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_HORIZON: u8 = 3;

#[derive(Parser)]
#[command(
    name = "triadic",
    version,
    about = "Exact q-series verification of internal congruences modulo powers of 3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Profile {
    Quick,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Xi,
    Zeta,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Xi => Side::Xi,
            SideArg::Zeta => Side::Zeta,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print coefficients of a named series.
    Expand {
        /// Series name: ph3, ps3, phi_neg, psi, f, g, xi, zeta, gamma, delta
        #[arg(long)]
        func: String,
        /// Number of coefficients to print, starting at the valuation.
        #[arg(long, default_value_t = 16)]
        terms: i64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Build a modular-equation table and write it to the cache.
    Table {
        #[arg(value_enum)]
        side: SideArg,
        #[arg(long, default_value_t = 60)]
        max_i: usize,
        /// Write the table to this path instead of the cache directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Run a verification suite and print a per-claim summary.
    Verify(VerifyArgs),
    /// Run a verification suite and write certificates (verify with a
    /// mandatory --out).
    Certify(VerifyArgs),
}

#[derive(Args, Clone)]
pub struct VerifyArgs {
    /// Suite: modeq, newton, valuations, phi, hats, congruence, pod,
    /// problem, all
    pub suite: String,
    #[arg(long, value_enum, default_value_t = Profile::Quick)]
    pub profile: Profile,
    /// Override the series horizon for series-identity checks.
    #[arg(long)]
    pub prec: Option<i64>,
    /// Override the table size.
    #[arg(long)]
    pub max_i: Option<usize>,
    /// Override the hat depth (hats suite) or probe depth (problem suite).
    #[arg(long)]
    pub max_m: Option<u32>,
    /// Override the scan window (congruence, pod suites).
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Restrict congruence scans to one family (ph3 or ps3).
    #[arg(long)]
    pub family: Option<String>,
    /// Restrict table-level suites to one side (xi or zeta).
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
    /// Fixed scan level m (congruence suite); defaults to the profile set.
    #[arg(long)]
    pub m: Option<u32>,
    /// Probe the congruence at modulus 3^(m+2+extra) instead of 3^(m+2).
    #[arg(long, default_value_t = 0)]
    pub modulus_extra: u32,
    /// Write certificates (JSON array) to this path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Expand {
            func,
            terms,
            format,
        } => cmd_expand(&func, terms, format),
        Command::Table {
            side,
            max_i,
            out,
            cache_dir,
        } => cmd_table(side.into(), max_i, out, cache_dir),
        Command::Verify(args) => suites::cmd_verify(args, false),
        Command::Certify(args) => suites::cmd_verify(args, true),
    };
    ExitCode::from(code)
}

pub fn exit_code_for(err: &CoreError) -> u8 {
    match err {
        CoreError::Usage(_) | CoreError::TableTooShort { .. } | CoreError::Io(_) => EXIT_USAGE,
        CoreError::Horizon { .. } => EXIT_HORIZON,
        CoreError::Integrality { .. }
        | CoreError::Certification { .. }
        | CoreError::Structural(_)
        | CoreError::Malformed(_) => EXIT_FAIL,
    }
}

fn cmd_expand(func: &str, terms: i64, format: Format) -> u8 {
    if terms < 1 {
        eprintln!("error: --terms must be >= 1");
        return EXIT_USAGE;
    }
    // ph3 and ps3 are aliases for the two generating functions
    let name = match func {
        "ph3" => SeriesName::F,
        "ps3" => SeriesName::G,
        other => match SeriesName::parse(other) {
            Some(n) => n,
            None => {
                eprintln!("error: unknown series name {other:?}");
                return EXIT_USAGE;
            }
        },
    };
    // enough horizon that `terms` coefficients exist from the valuation on
    // (delta starts at q^-2, zeta at q^1)
    let prec = terms + 2;
    let series = match named_series(name, prec) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    match format {
        Format::Human => {
            let start = series.valuation();
            for n in start..(start + terms).min(series.precision()) {
                println!("{n}\t{}", series.coeff(n));
            }
        }
        Format::Json => {
            let trimmed = series.truncate(series.valuation() + terms);
            let json = SeriesJson::from(&trimmed);
            println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
        }
    }
    EXIT_PASS
}

fn cmd_table(side: Side, max_i: usize, out: Option<PathBuf>, cache_dir: Option<PathBuf>) -> u8 {
    if max_i < 3 {
        eprintln!("error: --max-i must be >= 3 (the recurrence needs three base rows)");
        return EXIT_USAGE;
    }
    let table = match suites::load_or_build_table(side, max_i, cache_dir.as_deref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let path = match out {
        Some(p) => p,
        None => suites::cache_path(cache_dir.as_deref(), side, max_i),
    };
    if let Err(e) = suites::write_table(&table, &path) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let digits = table
        .rows()
        .iter()
        .flat_map(|r| r.coeffs().iter())
        .map(|c| c.to_string().trim_start_matches('-').len())
        .max()
        .unwrap_or(1);
    println!(
        "side {side}: {} rows written to {} (largest coefficient: {digits} digits)",
        table.rows().len(),
        path.display()
    );
    EXIT_PASS
}

mod commands;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cytrans::Format;

/// Betti tables and homological types of Calabi-Yau geometric transitions.
#[derive(Parser, Debug)]
#[command(name = "cytrans", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: cytrans::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Milnor number of a quasi-homogeneous or tabulated germ.
    Milnor(MilnorArgs),
    /// Hodge numbers of a Calabi-Yau threefold corner.
    Hodge(HodgeArgs),
    /// Evaluate scenario files.
    Transition {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Re-verify tables stored in records format.
    Check { file: PathBuf },
    /// Run embedded scenarios.
    Golden {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        #[arg(long, conflicts_with_all = ["name", "all"])]
        list: bool,
    },
    /// Run the oracle and property battery.
    Selftest {
        #[arg(long, default_value_t = 20241015)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
pub struct MilnorArgs {
    /// Comma-separated weights; rationals such as 4/5 are allowed.
    #[arg(long, requires = "degree", conflicts_with_all = ["bp", "icis"])]
    weights: Option<String>,
    #[arg(long)]
    degree: Option<String>,
    /// Defining polynomial, checked against the weights.
    #[arg(long, requires = "weights")]
    poly: Option<String>,
    /// Variable order for --poly (default: order of first appearance).
    #[arg(long, requires = "poly")]
    vars: Option<String>,
    /// Brieskorn-Pham exponents, e.g. 3,3,3,3.
    #[arg(long, conflicts_with = "icis")]
    bp: Option<String>,
    /// Tabulated complete intersection germ.
    #[arg(long)]
    icis: Option<String>,
}

#[derive(Args, Debug)]
pub struct HodgeArgs {
    /// Weights of a degree-sum hypersurface in weighted P4.
    #[arg(long, conflicts_with_all = ["ci", "numbers"])]
    wps: Option<String>,
    /// Degree of the hypersurface; defaults to the sum of the weights.
    #[arg(long, requires = "wps")]
    degree: Option<u64>,
    #[arg(long, requires = "wps")]
    poly: Option<String>,
    #[arg(long, requires = "poly")]
    vars: Option<String>,
    /// Complete intersection as n:d1,d2,...
    #[arg(long, conflicts_with = "numbers")]
    ci: Option<String>,
    /// h11 of the threefold; used with --wps and --ci.
    #[arg(long, default_value_t = 1)]
    h11: u64,
    /// h11,h21 given directly.
    #[arg(long)]
    numbers: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Milnor(a) => commands::milnor(a, cli.format),
        Command::Hodge(a) => commands::hodge(a, cli.format),
        Command::Transition { files } => commands::transition(files, cli.format),
        Command::Check { file } => commands::check(file, cli.format),
        Command::Golden { name, all, list } => commands::golden(name.as_deref(), *all, *list, cli.format),
        Command::Selftest { seed, cases } => Ok(selftest::run(*seed, *cases)),
    };
    match result {
        Ok(out) => {
            if let Err(e) = commands::emit(&out.text, cli.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

//! `rgroup`: validate instance files, compute both R-groups, fuzz the
//! theorem checker.
//!
//! Exit codes: 0 success or agreement, 1 domain violation or disagreement,
//! 2 usage or parse error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rgroup_core::GroupFamily;

#[derive(Debug, Parser)]
#[command(name = "rgroup", version, about = "R-groups of discrete series of classical p-adic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Ks,
    Arthur,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an instance file and list every violated rule.
    Validate {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute the Knapp–Stein and/or Arthur R-group of an instance.
    Rgroup {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        /// Cross-check the Arthur side by enumerating Weyl groups.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the theorem on seeded random instances.
    Fuzz(commands::FuzzArgs),
    /// Show the parameter's classification buckets and centralizer.
    Explain {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

pub fn parse_family(s: &str) -> Result<GroupFamily, String> {
    GroupFamily::from_short_name(s).ok_or_else(|| format!("unknown family {s:?}; use sp, so, o or u"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Validate { path, json } => commands::validate(&path, json),
        Command::Rgroup {
            path,
            side,
            oracle,
            json,
        } => commands::rgroup(&path, side, oracle, json),
        Command::Fuzz(args) => commands::fuzz(&args),
        Command::Explain { path, json } => commands::explain(&path, json),
    };
    ExitCode::from(code)
}

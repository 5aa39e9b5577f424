//! Command-line front end: canonical models, family members, point maps,
//! verification suites, the reverse 6-congruence search and batch checks.

pub mod commands;
pub mod records;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use congruent6::{parse_rat, Rat};
use serde::Serialize;
use serde_json::Value;

pub use records::{batch_ingest, parse_records, serialize_records, CurveRecord};

pub const DEFAULT_PRIME_BOUND: u64 = 1000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: malformed numbers, singular curves, unknown names.
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl From<congruent6::Error> for CliError {
    fn from(e: congruent6::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// `s:t` or `s,t`.
pub fn pair_arg(s: &str) -> Result<(Rat, Rat), String> {
    let (x, y) = s.split_once([':', ',']).ok_or_else(|| format!("expected `s:t`, got {s:?}"))?;
    Ok((rat_arg(x)?, rat_arg(y)?))
}

#[derive(Debug, Parser)]
#[command(name = "congruent6", version, about = "Exact 6-congruent families of elliptic curves")]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest prime used by the trace oracles.
    #[arg(long, global = true, env = "CONGRUENT6_PRIME_BOUND", default_value_t = DEFAULT_PRIME_BOUND)]
    pub bound: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct CurveArgs {
    #[arg(short, allow_hyphen_values = true, value_parser = rat_arg)]
    pub a: Rat,
    #[arg(short, allow_hyphen_values = true, value_parser = rat_arg)]
    pub b: Rat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a model attached to E: CX, CY, CXminus, CYminus, Z, XE6, Zminus, Zminus1_jac, Xminus1.
    Model {
        which: String,
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Print a family member: 2, 3d or 3r.
    Family {
        name: String,
        #[command(flatten)]
        curve: CurveArgs,
        /// Parameter `s:t`.
        #[arg(long, allow_hyphen_values = true, value_parser = pair_arg)]
        param: (Rat, Rat),
    },
    /// Apply a named map to a point.
    Map {
        name: String,
        #[command(flatten)]
        curve: CurveArgs,
        /// Coordinates, comma separated.
        #[arg(long, required = true, allow_hyphen_values = true, value_delimiter = ',', value_parser = rat_arg)]
        point: Vec<Rat>,
    },
    /// Run verification suites (`all` for every suite).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        seed: u64,
    },
    /// Build reverse 6-congruent pairs from explicit points.
    Search {
        /// `4.9` (parameter t) or `4.10` (parameter u:v).
        #[arg(long)]
        example: String,
        #[arg(long = "t", allow_hyphen_values = true, value_parser = rat_arg)]
        t: Vec<Rat>,
        #[arg(long = "uv", allow_hyphen_values = true, value_parser = pair_arg)]
        uv: Vec<(Rat, Rat)>,
    },
    /// Run a check over a JSON list of curves: mod6, mod2 or jacobians.
    Batch {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        check: String,
    },
}

/// The stable report shape written for every command.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub failures: Vec<String>,
}

/// A finished command: its report and a text rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub doc: Document,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.doc.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

/// Runs a parsed command line, writing `--out` if given.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let outcome = commands::dispatch(&cli.command, cli.bound)?;
    if let Some(path) = &cli.out {
        let body = serde_json::to_string_pretty(&outcome.doc).expect("report is plain data");
        std::fs::write(path, body + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_arguments() {
        let cli = Cli::try_parse_from([
            "congruent6",
            "map",
            "cxminus",
            "-a",
            "-6",
            "-b",
            "8",
            "--point",
            "-96,24,1,-24,24,1",
        ])
        .unwrap();
        let Command::Map { point, curve, .. } = cli.command else { panic!() };
        assert_eq!(point.len(), 6);
        assert_eq!(curve.a, congruent6::exact::int(-6));
        assert_eq!(pair_arg("-1/2:3").unwrap().0, congruent6::exact::rat(-1, 2));
        assert!(pair_arg("1").is_err());
    }
}

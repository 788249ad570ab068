use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use plane_ag::bounds::{bound_series, bound_table};
use plane_ag::config::{format_vector, parse_vector, CodeConfig};
use plane_ag::sim::simulate;
use plane_ag::{Code, Error};

/// Encode, decode and simulate AG codes on Miura-Kamiya plane curves.
#[derive(Parser)]
#[command(name = "plane-ag", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the codeword for a message of k comma-separated encodings.
    Encode { config: PathBuf, message: PathBuf },
    /// Decode a received word; exits with 2 if the result lies beyond the guaranteed radius.
    Decode {
        config: PathBuf,
        received: PathBuf,
        /// Print one record per decoding step before the message.
        #[arg(long)]
        trace: bool,
    },
    /// Monte-Carlo decoding trials, one CSV row per error weight.
    Simulate {
        config: PathBuf,
        /// Error weights, `t` or `t1..t2` (inclusive).
        #[arg(long, value_parser = parse_weights)]
        weights: RangeInclusive<usize>,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Order-bound table over u = 0..n-1 (nongaps only unless --all-u).
    Bounds {
        config: PathBuf,
        #[arg(long)]
        all_u: bool,
    },
}

fn parse_weights(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad weight `{t}`"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => num(s).map(|t| t..=t),
    }
}

fn load_code(path: &Path) -> anyhow::Result<Code> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cfg: CodeConfig = text.parse()?;
    Ok(cfg.build()?)
}

fn load_vector(code: &Code, path: &Path, expected: usize) -> anyhow::Result<Vec<plane_ag::Fe>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v = parse_vector(code.field(), &text)?;
    if v.len() != expected {
        bail!(Error::LengthMismatch { expected, actual: v.len() });
    }
    Ok(v)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Encode { config, message } => {
            let code = load_code(&config)?;
            let m = load_vector(&code, &message, code.k())?;
            println!("{}", format_vector(&code.encode(&m)?));
        }
        Cmd::Decode { config, received, trace } => {
            let code = load_code(&config)?;
            let v = load_vector(&code, &received, code.n())?;
            let (out, steps) = code.decode_trace(&v)?;
            if trace {
                for step in &steps {
                    println!("{step}");
                }
            }
            println!("{}", format_vector(&out.message));
            if !out.within_guarantee {
                eprintln!(
                    "warning: {} corrections exceed the guaranteed radius {}",
                    out.error_weight,
                    code.radius()
                );
                return Ok(ExitCode::from(2));
            }
        }
        Cmd::Simulate { config, weights, trials, seed } => {
            let code = load_code(&config)?;
            print!("{}", simulate(&code, weights, trials, seed)?.to_csv());
        }
        Cmd::Bounds { config, all_u } => {
            let code = load_code(&config)?;
            let range = 0..=code.n() as i64 - 1;
            let table = if all_u { bound_series(&code, range) } else { bound_table(&code, range) };
            print!("{}", table.to_csv());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

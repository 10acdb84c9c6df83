//! `matprod`: pattern generation, certification and regularity oracles for
//! the entries of a product of two generic matrices.
//!
//! Exit codes: 0 the property holds, 1 it fails, 2 usage error,
//! 3 inconclusive (budget exhausted).

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matprod_regseq::algebra::{is_prime, FieldKind};
use matprod_regseq::grobner::Budget;
use matprod_regseq::regseq::OracleMethod;
use matprod_regseq::xypattern::OrderChoice;

#[derive(Debug, Parser)]
#[command(name = "matprod", version, about = "Regular sequences among the entries of XY for generic matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the entries, the selected pattern and the augmented sequence.
    Gen,
    /// Certify the selected pattern (or an --input sequence) step by step.
    Certify,
    /// Decide regularity of the selected pattern (or --input) computationally.
    Oracle,
    /// Check the n = 2 zerodivisor relation for f22.
    Counterexample,
    /// Greedily extend the pattern by the remaining entries.
    Search,
    /// Reduced Gröbner basis of the --input polynomials.
    Gb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Gfp,
    Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Paper,
    Grevlex,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Hilbert,
    Colon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Opts {
    /// Matrix size.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Gfp)]
    field: FieldArg,
    /// Characteristic for --field gfp.
    #[arg(long, global = true, default_value_t = 32003)]
    prime: u32,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Paper)]
    order: OrderArg,
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Hilbert)]
    method: MethodArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Polynomials, one per line; lines starting with '#' are ignored.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Maximum number of critical pairs per Gröbner run.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget_pairs: Option<u64>,
    /// Maximum critical-pair degree per Gröbner run.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    budget_degree: Option<u32>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

/// Validated settings shared by all subcommands.
pub struct Config {
    pub n: usize,
    pub field: FieldKind,
    pub order: OrderChoice,
    pub method: OracleMethod,
    pub format: Format,
    pub input: Option<PathBuf>,
    pub budget: Budget,
}

/// Why a command did not exit 0.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Inconclusive(String),
}

/// A command's rendered output and whether its property holds.
pub struct Emission {
    pub text: String,
    pub holds: bool,
}

impl Opts {
    fn validate(&self) -> Result<Config, Failure> {
        if self.n < 2 {
            return Err(Failure::Usage(format!("--n must be at least 2, got {}", self.n)));
        }
        let field = match self.field {
            FieldArg::Rat => FieldKind::Rational,
            FieldArg::Gfp => {
                if !is_prime(self.prime) {
                    return Err(Failure::Usage(format!("--prime {} is not prime", self.prime)));
                }
                if self.prime as usize <= self.n {
                    return Err(Failure::Usage(format!(
                        "--prime {} must exceed --n {}",
                        self.prime, self.n
                    )));
                }
                FieldKind::prime(self.prime).map_err(|e| Failure::Usage(e.to_string()))?
            }
        };
        Ok(Config {
            n: self.n,
            field,
            order: match self.order {
                OrderArg::Paper => OrderChoice::Paper,
                OrderArg::Grevlex => OrderChoice::Grevlex,
                OrderArg::Lex => OrderChoice::Lex,
            },
            method: match self.method {
                MethodArg::Hilbert => OracleMethod::Hilbert,
                MethodArg::Colon => OracleMethod::Colon,
            },
            format: self.format,
            input: self.input.clone(),
            budget: Budget {
                max_pairs: self.budget_pairs.map(|k| k as usize),
                max_degree: self.budget_degree,
            },
        })
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli.opts.validate().and_then(|cfg| match cli.command {
        Command::Gen => commands::gen(&cfg),
        Command::Certify => commands::certify(&cfg),
        Command::Oracle => commands::oracle(&cfg),
        Command::Counterexample => commands::counterexample(&cfg),
        Command::Search => commands::search(&cfg),
        Command::Gb => commands::gb(&cfg),
    });
    match result {
        Ok(emission) => {
            if let Err(e) = emit(&emission.text, cli.opts.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if emission.holds { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(3)
        }
    }
}

//! `wronsk`: root bounds, identity testing and checks for sums of products
//! of powers of sparse polynomials.

mod commands;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wronsk_core::limits::{DEFAULT_BASIS_CAP, DEFAULT_MAX_QUERIES};
use wronsk_core::report::Report;
use wronsk_core::{Error, ExpansionBudget, Limits};

#[derive(Parser, Debug)]
#[command(name = "wronsk", version, about = "Real-root bounds and identity tests for sums of products of powers")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generators and verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest degree the expansion oracle may produce.
    #[arg(long, global = true, default_value_t = ExpansionBudget::default().max_degree)]
    budget_degree: u64,
    /// Largest sparsity the expansion oracle may produce.
    #[arg(long, global = true, default_value_t = ExpansionBudget::default().max_sparsity)]
    budget_sparsity: usize,
    /// Largest Wronskian order built by the whitebox reduction.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_CAP)]
    basis_cap: usize,
    /// Largest number of blackbox evaluations.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_QUERIES)]
    max_queries: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundMethod {
    Sparse,
    Dense,
    Upsilon,
    Main3,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PitMode {
    Blackbox,
    Whitebox,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Sparse,
    Dense,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Optimal,
    Descartes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZeroArg {
    Off,
    Duplicate,
    Hidden,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PowerDerivative,
    Factorization,
    Frobenius,
    Optimality,
    Soundness,
    PitAgreement,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root-count bounds for an instance file ("-" reads stdin).
    Bound {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BoundMethod::All)]
        method: BoundMethod,
        /// Also expand the instance, count its roots and check every bound.
        #[arg(long)]
        exact: bool,
    },
    /// Decide whether an instance is identically zero.
    Pit {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = PitMode::Whitebox)]
        mode: PitMode,
        /// Root bound behind the blackbox hitting set.
        #[arg(long, value_enum, default_value_t = ModelArg::Dense)]
        model: ModelArg,
    },
    /// Exact distinct real roots of the expanded instance.
    Roots { file: PathBuf },
    /// Factored Wronskian of the first terms of an instance.
    Wronskian {
        file: PathBuf,
        /// Number of leading terms (default: all).
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::Random)]
        kind: GenKind,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = 3)]
        alpha_max: u64,
        #[arg(long, default_value_t = 5)]
        coeff_max: u64,
        /// Parameter of the optimal family.
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, value_enum, default_value_t = ZeroArg::Off)]
        forced_zero: ZeroArg,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Number of randomized cases.
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

/// Why a command stopped; each maps to one exit code.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Resource(String),
    SuiteFailed,
    Soundness(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::SuiteFailed => 1,
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Soundness(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// A finished command: the report and its human-readable rendering.
pub struct Output {
    pub report: Report,
    pub lines: Vec<String>,
    pub failure: Option<Failure>,
}

pub struct Context {
    pub seed: u64,
    pub limits: Limits,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        seed: cli.seed,
        limits: Limits {
            budget: ExpansionBudget {
                max_degree: cli.budget_degree,
                max_sparsity: cli.budget_sparsity,
            },
            basis_cap: cli.basis_cap,
            max_queries: cli.max_queries,
        },
    };
    let result = match cli.command {
        Command::Bound { file, method, exact } => commands::bound(&ctx, &file, method, exact),
        Command::Pit { file, mode, model } => commands::pit(&ctx, &file, mode, model),
        Command::Roots { file } => commands::roots(&ctx, &file),
        Command::Wronskian { file, prefix } => commands::wronskian(&ctx, &file, prefix),
        Command::Gen {
            kind,
            k,
            m,
            t,
            d,
            alpha_max,
            coeff_max,
            p,
            forced_zero,
            out,
        } => {
            let params = commands::GenParams {
                k,
                m,
                t,
                d,
                alpha_max,
                coeff_max,
                p,
                forced_zero,
            };
            commands::gen(&ctx, kind, &params, out.as_deref())
        }
        Command::Verify { suite, cases } => suites::verify(&ctx, suite, cases),
    };
    match result {
        Ok(out) => {
            let text = if cli.json {
                // reports hold only strings, maps and options
                serde_json::to_string_pretty(&out.report).unwrap()
            } else {
                out.lines.join("\n")
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    if let Failure::Soundness(msg) = &f {
                        eprintln!("soundness violation: {msg}");
                    }
                    ExitCode::from(f.code())
                }
            }
        }
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Resource(msg) => eprintln!("resource limit: {msg}"),
                Failure::Soundness(msg) => eprintln!("soundness violation: {msg}"),
                Failure::SuiteFailed => eprintln!("suite failed"),
            }
            ExitCode::from(f.code())
        }
    }
}

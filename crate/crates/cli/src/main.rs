mod commands;
mod inputs;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hadamard_schemes::actions::OrbitMode;
use serde::Serialize;
use serde_json::Value;

use inputs::InputHash;

#[derive(Parser, Debug)]
#[command(name = "hadschemes", version, about = "Association schemes from Hadamard matrices")]
struct Cli {
    /// Report `wall_time_ms` as null so identical runs give identical output.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check, inspect and export association schemes.
    #[command(subcommand)]
    Scheme(SchemeCommand),
    /// Generate and inspect Hadamard matrices.
    #[command(subcommand)]
    Hadamard(HadamardCommand),
    /// Build the scheme S(H) from a base scheme and a Hadamard matrix.
    #[command(subcommand)]
    Build(BuildCommand),
    /// Orbits of K on the equivalence class of a Hadamard matrix.
    Orbits(OrbitsArgs),
    /// Whether two Hadamard matrices are similar with respect to a scheme.
    Similar {
        #[arg(long)]
        scheme: String,
        h1: String,
        h2: String,
    },
    /// Lower bound on the number of similarity classes.
    Bound(BoundArgs),
    /// Recompute the published tables.
    #[command(subcommand)]
    Reproduce(ReproduceCommand),
}

#[derive(Subcommand, Debug)]
enum SchemeCommand {
    /// Check the axioms and summarize valencies and intersection numbers.
    Verify { file: String },
    /// Order of the automorphism group (orders up to 8).
    Aut { file: String },
    /// Order of the group of point maps permuting the relations (orders up to 8).
    Iso { file: String },
    /// Print a builtin scheme in the text format.
    Show {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum HadamardCommand {
    /// Write a generated matrix.
    #[command(subcommand)]
    Gen(GenCommand),
    Verify { file: String },
    /// Order of the group of row/column permutation pairs fixing the matrix and a point.
    Aut {
        file: String,
        #[arg(long, default_value_t = 0)]
        fix: usize,
    },
    /// Whether two matrices are equivalent under signed permutations.
    Equiv { f1: String, f2: String },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    /// Sylvester matrix of order 2^K.
    Sylvester {
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum BuildCommand {
    /// Build, verify the axioms, check fission and the five explicit isomorphisms.
    Sh {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        hadamard: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Full,
    Normalized,
}

#[derive(Args, Debug)]
struct OrbitsArgs {
    #[arg(long)]
    scheme: String,
    #[arg(long)]
    hadamard: String,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct BoundArgs {
    #[command(subcommand)]
    sylvester: Option<BoundCommand>,
    #[arg(long, requires = "hadamard")]
    scheme: Option<String>,
    #[arg(long, requires = "scheme")]
    hadamard: Option<String>,
}

#[derive(Subcommand, Debug)]
enum BoundCommand {
    /// The bound for the Sylvester matrix of order 2^N over its group scheme.
    Sylvester { n: u32 },
}

#[derive(Subcommand, Debug)]
enum ReproduceCommand {
    /// All four order-4 base schemes.
    Table2,
    /// Order-8 rows; rows without a builtin or data file get the bound only.
    Table3 {
        /// Comma-separated row names such as AS85,C8. Defaults to every row.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<String>,
        /// Directory searched for `<ROW>.txt` scheme files.
        #[arg(long, default_value = "data")]
        data: PathBuf,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input; exit status 2.
    Input(String),
    /// Well-formed input that fails the scheme or Hadamard axioms.
    Invalid(String),
}

impl From<hadamard_schemes::Error> for CliError {
    fn from(e: hadamard_schemes::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command produced and whether its checks held.
pub struct Outcome {
    pub outputs: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(outputs: Value) -> Self {
        Self { outputs, passed: true }
    }
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: Vec<String>,
    inputs: &'a [InputHash],
    outputs: Value,
    passed: bool,
    wall_time_ms: Option<u64>,
    version: &'static str,
}

impl From<ModeArg> for OrbitMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Full => OrbitMode::Full,
            ModeArg::Normalized => OrbitMode::Normalized,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut ctx = commands::Context::default();
    let result = commands::run(&cli.command, &mut ctx);
    let elapsed = start.elapsed().as_millis() as u64;
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(outcome)) => {
            let report = RunReport {
                command: std::env::args().skip(1).collect(),
                inputs: &ctx.inputs,
                outputs: outcome.outputs,
                passed: outcome.passed,
                wall_time_ms: (!cli.no_timing).then_some(elapsed),
                version: env!("CARGO_PKG_VERSION"),
            };
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(CliError::Input(msg) | CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

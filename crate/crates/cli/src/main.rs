mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use input::InputArgs;
use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "polykeller", version, about = "Exact checks and constructions for polynomial maps")]
struct Cli {
    /// Print the run report as canonical JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a property of a map or polynomial.
    Check {
        kind: CheckKind,
        #[command(flatten)]
        input: InputArgs,
        /// Power for the Druzkowski check.
        #[arg(long, default_value_t = 3)]
        d: u32,
    },
    /// Build an extension or reduction of a map.
    Construct(ConstructArgs),
    /// Run a seeded property suite.
    Verify(VerifyArgs),
    /// Emit a seeded instance as a map file.
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Keller,
    Squarefree,
    Irreducible,
    Nilpotent,
    Symmetric,
    Druzkowski,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantArg {
    Ch,
    Dz,
    Sch,
    Gh,
    Chl,
    Dzl,
    Schl,
    Ghl,
    Symred,
    Grad,
}

#[derive(clap::Args, Debug)]
pub struct ConstructArgs {
    #[arg(long)]
    pub variant: VariantArg,
    /// Comma-separated λ for the scalar variants.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Hadamard power for the block variants.
    #[arg(long)]
    pub d: Option<u32>,
    /// Tail for gh (one expression) or ghl (one per component), over the
    /// output variables.
    #[arg(long, allow_hyphen_values = true)]
    pub tail: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub uprime: Option<String>,
    /// The polynomial f of symred and grad, over the input variables.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(short = 'i', long = "input")]
    pub input: Option<PathBuf>,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub property: String,
    /// Generator for the main map; defaults per property.
    #[arg(long = "gen")]
    pub generator: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, env = "POLYKELLER_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(clap::Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub degree: Option<u32>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, env = "POLYKELLER_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(argv);
    let result = match &cli.command {
        Command::Check { kind, input, d } => commands::check(*kind, input, *d, &mut report),
        Command::Construct(args) => commands::construct(args, &mut report),
        Command::Verify(args) => commands::verify(args, &mut report),
        Command::Gen(args) => commands::gen(args, &mut report),
    };
    report.duration = start.elapsed();
    match result {
        Ok(map_text) => {
            let mut out = std::io::stdout().lock();
            let written = match map_text {
                _ if cli.json => writeln!(out, "{}", report.to_json()),
                Some(text) => write!(out, "{text}"),
                None => write!(out, "{}", report.render_text()),
            };
            if written.is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

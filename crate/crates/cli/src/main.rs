//! `fdalg`: command-line access to the fdalg-core computations.

mod commands;
mod context;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fdalg_core::search::DEFAULT_SEED;
use fdalg_core::Field;

use crate::context::Context;
use crate::report::OutputMode;

#[derive(Parser, Debug)]
#[command(name = "fdalg", version, about = "Exact homological algebra for finite-dimensional algebras")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit dimension sequences as CSV (resolve only).
    #[arg(long, global = true)]
    csv: bool,

    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Resolution and period-search horizon.
    #[arg(long, global = true, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
    horizon: u64,

    /// Ground field: `Q` or `Fp:<p>`; overrides the field named in files.
    #[arg(long, global = true)]
    field: Option<Field>,

    /// Value for the parameter `q` in algebra files.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect an algebra.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Resolutions, periodicity, Ext and isomorphism of modules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Orbit dimensions and degeneration tests.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Bimodules over the enveloping algebra.
    #[command(subcommand)]
    Bimodule(BimoduleCmd),
    /// Write fixture files: liu-schulz, truncated-poly, a2, exterior, kx2-twist.
    Examples(ExamplesArgs),
}

#[derive(Args, Debug)]
struct AlgebraArg {
    /// Algebra file (JSON).
    #[arg(long = "algebra", visible_alias = "file", value_name = "FILE")]
    path: PathBuf,
}

/// A module: `--module SPEC` or `--gen ELEMENT` (repeatable).
///
/// SPEC is a comma-separated direct sum of `regular`, `dual-regular`,
/// `simple:I`, `projective:I`, `left:G;G..` (the left ideal `A g`),
/// `right:G;G..` (the right ideal `g A`) or a module file path.
#[derive(Args, Debug)]
struct ModuleArg {
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    module: Option<String>,
    /// Generator of a one-sided ideal; repeat for several.
    #[arg(long = "gen", value_name = "ELEMENT", allow_hyphen_values = true)]
    generators: Vec<String>,
    /// Side of the ideal generated by `--gen`.
    #[arg(long, default_value = "left", value_parser = ["left", "right"])]
    side: String,
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Validate and summarize: dimension, radical, self-injectivity.
    Check(AlgebraArg),
    /// Basis of the center.
    Center(AlgebraArg),
    /// Basis of the radical and the dimensions of its powers.
    Radical(AlgebraArg),
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    /// Minimal projective resolution up to the horizon.
    Resolve {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Search for a repetition among the syzygies.
    Period {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Decide whether two modules are isomorphic.
    Iso {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        other: String,
    },
    /// dim Ext^n(M, N).
    Ext {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        other: String,
        #[arg(long, short = 'n', default_value_t = 1)]
        degree: usize,
    },
    /// Split off projective summands.
    Strip {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
}

#[derive(Subcommand, Debug)]
enum OrbitCmd {
    /// Orbit dimension and openness certificate.
    Stats {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Hom-dimension obstruction to M degenerating to N.
    Degeneration {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
        other: String,
    },
    /// Check that the regular bimodule is not a proper degeneration of a
    /// candidate bimodule.
    RegularDegeneration {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// `regular`, `syzygy:N`, `cosyzygy:N`, `twist:FILE` or a module
        /// file over the enveloping algebra.
        #[arg(long, value_name = "BSPEC")]
        candidate: String,
    },
}

#[derive(Subcommand, Debug)]
enum BimoduleCmd {
    /// Ω^n of the algebra as a bimodule.
    Syzygy {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        /// Identify the result as a twisted bimodule if possible.
        #[arg(long)]
        recognize_twist: bool,
    },
    /// Order of an automorphism modulo inner automorphisms.
    TwistOrder {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "FILE")]
        automorphism: PathBuf,
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
    /// Verify a stable equivalence of Morita type given by X and Y.
    StableCheck {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_name = "BSPEC")]
        x: String,
        #[arg(long, value_name = "BSPEC")]
        y: String,
    },
}

#[derive(Args, Debug)]
struct ExamplesArgs {
    name: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    t: String,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    let mode = if cli.json {
        OutputMode::Json
    } else if cli.csv {
        OutputMode::Csv
    } else {
        OutputMode::Text
    };
    let mut ctx = Context::new(argv[1..].join(" "), cli.seed, cli.horizon as usize, cli.field, cli.q.clone());
    match commands::run(&mut ctx, cli.command) {
        Ok(out) => {
            print!("{}", report::render(&ctx, &out, mode));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}

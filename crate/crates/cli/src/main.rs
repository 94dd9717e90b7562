mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quiverhh::linalg::{Field, PrimeField, Rationals};
use quiverhh::poset::Poset;
use quiverhh::quiver::parse_presentation;

use commands::Input;
use report::Report;

const EXIT_PARSE: u8 = 2;
const EXIT_MODEL: u8 = 3;

/// Hochschild cohomology of bound quiver algebras and the comparison with
/// the simplicial cohomology of the associated poset.
///
/// Inputs are `.bqp` presentations or `.poset` files. Commands that expect a
/// presentation accept a poset and use its incidence algebra; `sh` and
/// `reduce` accept a presentation and use its poset of path classes.
#[derive(Parser)]
#[command(name = "quiverhh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Highest cohomological degree (default 4; `oracle-hh` defaults to its cap of 3).
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    /// Coefficient field: `q` for the rationals or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,

    /// Worker threads for matrix assembly and rank computations.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Admissibility, coherence, compatibility and schurian checks.
    Check { file: PathBuf },
    /// The poset of clean path classes with its Hasse diagram.
    Poset { file: PathBuf },
    /// Hochschild cohomology dimensions from the reduced complex.
    Hh { file: PathBuf },
    /// Simplicial cohomology dimensions of a poset.
    Sh { file: PathBuf },
    /// Igusa-Zacharia reduction of a poset.
    Reduce { file: PathBuf },
    /// The comparison morphism, its verification and induced maps.
    Compare { file: PathBuf },
    /// Hochschild cohomology from the full bar complex (small algebras only).
    OracleHh { file: PathBuf },
    /// The incidence presentation of a poset.
    Incidence { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy)]
enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let p = s
        .strip_prefix("fp:")
        .ok_or_else(|| format!("expected `q` or `fp:<prime>`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("`{p}` is not a number"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(FieldSpec::Prime(p))
}

enum Failure {
    Parse(String),
    Model(String),
}

impl From<quiverhh::Error> for Failure {
    fn from(e: quiverhh::Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Model(e.to_string())
        }
    }
}

fn load(path: &Path) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let located = |e: quiverhh::Error| match Failure::from(e) {
        Failure::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
        other => other,
    };
    if path.extension().is_some_and(|x| x == "poset") {
        Ok(Input::Poset(Poset::parse(&text).map_err(located)?))
    } else {
        Ok(Input::Presentation(parse_presentation(&text).map_err(located)?))
    }
}

fn run<F: Field>(field: &F, cli: &Cli) -> Result<Report, Failure> {
    let degree = cli.max_degree.unwrap_or(4);
    let report = match &cli.command {
        Command::Check { file } => commands::check(field, &load(file)?)?,
        Command::Poset { file } => commands::poset(field, &load(file)?)?,
        Command::Hh { file } => commands::hh(field, &load(file)?, degree)?,
        Command::Sh { file } => commands::sh(field, &load(file)?, degree)?,
        Command::Reduce { file } => commands::reduce(field, &load(file)?)?,
        Command::Compare { file } => commands::compare(field, &load(file)?, degree)?,
        Command::OracleHh { file } => commands::oracle_hh(field, &load(file)?, cli.max_degree)?,
        Command::Incidence { file } => commands::incidence(field, &load(file)?)?,
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_MODEL);
    }
    let outcome = match cli.field {
        FieldSpec::Rationals => run(&Rationals, &cli),
        FieldSpec::Prime(p) => run(&PrimeField::new(p).expect("checked when parsing"), &cli),
    };
    match outcome {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text()),
                Format::Records => print!("{}", report.json()),
            }
            if report.failed {
                eprintln!("error: a verified identity failed");
                ExitCode::from(EXIT_MODEL)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Model(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_MODEL)
        }
    }
}

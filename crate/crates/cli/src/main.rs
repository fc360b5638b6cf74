use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cquat::Conjugation;
use cquat_cli::commands::{self, Input, Options, Outcome, Predicate};
use cquat_cli::{load, CliError};

/// Commutative quaternion matrix tool. Reads `.cqm` files and prints a JSON
/// result document on stdout.
#[derive(Parser)]
#[command(name = "cquat", version)]
struct Cli {
    /// Relative tolerance for the operation's acceptance test.
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Skip eigenvectors and residuals in `eig`.
    #[arg(long, global = true)]
    no_vectors: bool,

    /// RNG seed for `check selftest`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-determinant det(A1 + A2) det(A1 - A2).
    Detq { file: PathBuf },
    /// Two-sided inverse.
    Inv { file: PathBuf },
    /// The 2n complex eigenvalues, with eigenvectors unless --no-vectors.
    Eig { file: PathBuf },
    /// Complex adjoint and its two diagonal blocks.
    Adjoint { file: PathBuf },
    /// Matrix product A B.
    Mul { lhs: PathBuf, rhs: PathBuf },
    /// Evaluate a predicate. `selftest` takes no file.
    Check {
        predicate: Predicate,
        file: Option<PathBuf>,
        /// Conjugation used by normal, hermitian and unitary.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        conj: u8,
    },
}

fn input(path: &Path) -> Result<Input, CliError> {
    let f = load(path)?;
    Ok(Input::new(path.display().to_string(), f.label, f.matrix))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Some(t) = cli.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Usage(format!("--tolerance must be positive and finite, got {t}")));
        }
    }
    let opts = Options {
        tolerance: cli.tolerance,
        vectors: !cli.no_vectors,
        seed: cli.seed,
    };
    Ok(match &cli.command {
        Command::Detq { file } => commands::detq(&input(file)?, &opts),
        Command::Inv { file } => commands::inv(&input(file)?, &opts),
        Command::Eig { file } => commands::eig(&input(file)?, &opts),
        Command::Adjoint { file } => commands::adjoint(&input(file)?),
        Command::Mul { lhs, rhs } => commands::mul(&input(lhs)?, &input(rhs)?),
        Command::Check { predicate, file, conj } => {
            let conj = Conjugation::try_from(*conj).expect("range checked by clap");
            let loaded = match (predicate, file) {
                (Predicate::Selftest, _) => None,
                (_, Some(f)) => Some(input(f)?),
                (_, None) => return Err(CliError::Usage("this predicate needs an input file".into())),
            };
            commands::check(*predicate, loaded.as_ref(), conj, &opts)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.doc).expect("document serializes");
            // a closed pipe on stdout is not worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if let Some(why) = &out.doc.failure {
                eprintln!("cquat: {why}");
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("cquat: {e}");
            ExitCode::from(e.exit() as u8)
        }
    }
}

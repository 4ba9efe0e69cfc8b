use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aprtilt::cli::{self, CliError, Report, DEFAULT_DEGREE, DEFAULT_DEPTH};

/// Verification of APR tilts, higher preprojective algebras and QP mutations.
#[derive(Parser)]
#[command(name = "aprtilt", version)]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Global dimension and bounded n-representation-infinite check.
    CheckNri {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// m-APR tilt at a simple projective vertex and the quiver of End(T).
    AprTilt {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        /// Defaults to n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Degreewise structure of the (n+1)-preprojective algebra.
    Preproj {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Lift of the tilt to the preprojective algebra.
    VerifyLift {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: usize,
    },
    /// Mutation of the quiver with potential at a vertex.
    QpMutate {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Every check for one of the shipped examples.
    VerifyExample {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        example: u8,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<Report, CliError> {
    match cmd {
        Cmd::CheckNri { file, depth } => cli::check_nri(&read(&file)?, depth),
        Cmd::AprTilt { file, vertex, m, depth } => cli::apr_tilt(&read(&file)?, &vertex, m, depth),
        Cmd::Preproj { file, degree } => cli::preproj(&read(&file)?, degree),
        Cmd::VerifyLift { file, vertex, m, degree } => cli::verify_lift(&read(&file)?, &vertex, m, degree),
        Cmd::QpMutate { file, vertex } => cli::qp_mutate_file(&read(&file)?, &vertex),
        Cmd::VerifyExample { example } => cli::verify_example(example),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.cmd) {
        Ok(rep) => {
            print!("{}", rep.render());
            ExitCode::from(rep.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbos::format::sig12;
use qbos::GamePayoffs;
use qbos_cli::{commands, CliError, ExitStatus};

/// Analyse the quantized Battle of the Sexes.
#[derive(Parser)]
#[command(name = "qbos", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Corner payoffs, equilibria, coefficients and the dilemma verdict for a spec.
    Analyze { spec: PathBuf },
    /// Both payoffs at the spec's profile.
    Payoff { spec: PathBuf },
    /// Evaluate every point of the moduli simplex lattice and write a CSV file.
    Scan {
        #[command(flatten)]
        payoffs: PayoffArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        resolution: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-derive the reference corner matrices and verdicts.
    Reproduce {
        #[command(flatten)]
        payoffs: OptionalPayoffArgs,
    },
}

#[derive(Args)]
struct PayoffArgs {
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    gamma: f64,
}

#[derive(Args)]
struct OptionalPayoffArgs {
    #[arg(long, allow_negative_numbers = true, requires_all = ["beta", "gamma"])]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["alpha", "gamma"])]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["alpha", "beta"])]
    gamma: Option<f64>,
}

fn canonical(alpha: f64, beta: f64, gamma: f64) -> Result<GamePayoffs, CliError> {
    GamePayoffs::new(alpha, beta, gamma).map_err(|e| CliError::field("payoffs", e))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { spec } => {
            let spec = commands::load_spec(&spec)?;
            print!("{}", commands::analyze(&spec)?.render());
        }
        Command::Payoff { spec } => {
            let spec = commands::load_spec(&spec)?;
            let pair = commands::payoff(&spec)?;
            println!("{} {}", sig12(pair.alice), sig12(pair.bob));
        }
        Command::Scan { payoffs, resolution, out } => {
            let g = canonical(payoffs.alpha, payoffs.beta, payoffs.gamma)?;
            let summary = commands::scan(&g, resolution, &out)?;
            println!("{}", commands::summary_line(&summary));
        }
        Command::Reproduce { payoffs } => {
            let (alpha, beta, gamma) = match (payoffs.alpha, payoffs.beta, payoffs.gamma) {
                (Some(a), Some(b), Some(g)) => (a, b, g),
                _ => (2.0, 1.0, 0.0),
            };
            let g = canonical(alpha, beta, gamma)?;
            match commands::reproduce(&g) {
                Ok(text) => print!("{text}"),
                Err((text, err)) => {
                    print!("{text}");
                    return Err(err);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitStatus::Success.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_status().into()
        }
    }
}

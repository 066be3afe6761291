mod commands;
mod document;
mod error;
mod matrices;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::{CliError, CliResult};

/// Exact signatures of Lefschetz fibrations from monodromy factorizations.
#[derive(Parser)]
#[command(name = "lefsig", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature of the total space of a fibration over the disk.
    Signature {
        file: PathBuf,
        /// Print the per-cycle table.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Signature of the n-fold cyclic cover branched along a regular fiber.
    Power {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Maslov triple index of three Lagrangians, each given by spanning rows.
    Maslov {
        file: PathBuf,
        /// Also check the index axioms around the given triple.
        #[arg(long)]
        check_axioms: bool,
        #[arg(long)]
        json: bool,
    },
    /// Meyer cocycle of two symplectic matrices.
    Meyer {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Emit a fibration with 3n singular fibers and signature n.
    Generate {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        boundary: u32,
        #[arg(long)]
        n: u32,
        /// Write the document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    let text = match cli.command {
        Command::Signature { file, trace, json } => commands::cmd_signature(&file, trace, json)?,
        Command::Power { file, n, json } => commands::cmd_power(&file, n, json)?,
        Command::Maslov { file, check_axioms, json } => commands::cmd_maslov(&file, check_axioms, json)?,
        Command::Meyer { file, json } => commands::cmd_meyer(&file, json)?,
        Command::Generate { genus, boundary, n, out } => {
            let (doc, total, cycles) = commands::cmd_generate(genus, boundary, n)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &doc).map_err(|source| CliError::Write { path: path.clone(), source })?;
                    format!("wrote {} ({cycles} cycles)\nsignature: {total}\n", path.display())
                }
                None => {
                    eprintln!("signature: {total}");
                    doc
                }
            }
        }
    };
    print!("{text}");
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use io::{CliError, Sink};

#[derive(Parser)]
#[command(name = "isocone", version, about = "Finite posets, isotone cones and M2 isocones from the command line")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Override the default comparison tolerance of the command.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Finite posets and preorders.
    Poset {
        #[command(subcommand)]
        cmd: commands::PosetCmd,
    },
    /// Cones of isotone functions.
    Cone {
        #[command(subcommand)]
        cmd: commands::ConeCmd,
    },
    /// Hermitian matrices.
    Herm {
        #[command(subcommand)]
        cmd: commands::HermCmd,
    },
    /// Isocones of 2x2 matrices and the Bloch sphere.
    M2 {
        #[command(subcommand)]
        cmd: commands::M2Cmd,
    },
    /// Posets versus commutative algebras.
    Dual {
        #[command(subcommand)]
        cmd: commands::DualCmd,
    },
    /// Orders from distances to landmarks.
    Gps {
        #[command(subcommand)]
        cmd: commands::GpsCmd,
    },
    /// Acceptance suite.
    Accept {
        #[command(subcommand)]
        cmd: commands::AcceptCmd,
    },
}

pub struct Ctx {
    pub tol: Option<f64>,
    pub format: Format,
    pub sink: Sink,
}

impl Ctx {
    /// Rejects output formats the command does not produce.
    pub fn require(&self, allowed: &[Format]) -> Result<(), CliError> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(CliError::new("Usage", "this command does not support the requested --format"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { tol: cli.tol, format: cli.format, sink: Sink { out: cli.out } };
    let result = match cli.verb {
        Verb::Poset { cmd } => commands::poset(&ctx, cmd),
        Verb::Cone { cmd } => commands::cone(&ctx, cmd),
        Verb::Herm { cmd } => commands::herm(&ctx, cmd),
        Verb::M2 { cmd } => commands::m2(&ctx, cmd),
        Verb::Dual { cmd } => commands::dual(&ctx, cmd),
        Verb::Gps { cmd } => commands::gps(&ctx, cmd),
        Verb::Accept { cmd } => commands::accept(&ctx, cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind == "Usage" => {
            eprintln!("error: {}", e.detail);
            ExitCode::from(2)
        }
        Err(e) => {
            println!("{}", e.to_json());
            ExitCode::from(1)
        }
    }
}

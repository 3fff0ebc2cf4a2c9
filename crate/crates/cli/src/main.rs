use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use indres_cli::commands::{
    cmd_catalog, cmd_homdim, cmd_induce, cmd_mackey, cmd_restrict, cmd_verify, Options,
};

/// Exact induction and restriction along finite-group homomorphisms, with verified isomorphism certificates.
#[derive(Parser)]
#[command(name = "indres", version)]
struct Cli {
    /// Seed for randomized certificate search.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Random candidates tried per certificate search.
    #[arg(long, global = true)]
    max_trials: Option<usize>,
    /// Write the machine report (JSON) here; `-` for standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Suppress the human-readable summary.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite file, or the built-in catalog suite when none is given.
    Verify { suite: Option<PathBuf> },
    /// Induce a representation along a hom; writes a representation file.
    Induce {
        hom: PathBuf,
        rep: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Restrict a representation along a hom; writes a representation file.
    Restrict {
        hom: PathBuf,
        rep: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print dim Hom_G(A, B).
    Homdim { rep_a: PathBuf, rep_b: PathBuf },
    /// Check Mackey's formula for α, β and a representation of the domain of α.
    Mackey {
        alpha: PathBuf,
        beta: PathBuf,
        rep: PathBuf,
    },
    /// List the built-in catalog, or export it as files.
    Catalog {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        seed: cli.seed,
        max_trials: cli.max_trials,
        report: cli.report,
        quiet: cli.quiet,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Verify { suite } => cmd_verify(suite.as_deref(), &opts, &mut out),
        Command::Induce { hom, rep, out: o } => cmd_induce(hom, rep, o.as_deref(), &mut out),
        Command::Restrict { hom, rep, out: o } => cmd_restrict(hom, rep, o.as_deref(), &mut out),
        Command::Homdim { rep_a, rep_b } => cmd_homdim(rep_a, rep_b, &mut out),
        Command::Mackey { alpha, beta, rep } => cmd_mackey(alpha, beta, rep, &opts, &mut out),
        Command::Catalog { out: dir } => cmd_catalog(dir.as_deref(), &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

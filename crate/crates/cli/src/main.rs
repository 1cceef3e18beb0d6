//! `fdk`: construct, verify and inspect formally dual pairs.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on bad arguments or input.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::BadInput;

#[derive(Parser, Debug)]
#[command(name = "fdk", version, about = "Formally dual pairs in finite abelian groups")]
struct Cli {
    /// Worker threads; FDK_THREADS takes precedence. Defaults to all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write a run manifest here.
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the primitive pair in Z2 x Z4^{2m}.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=7))]
        m: u32,
        /// Skip the duality and primitivity re-check.
        #[arg(long)]
        no_verify: bool,
        /// Pair file to write; stdout if absent. The manifest goes next to it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a pair file for formal duality and primitivity.
    Verify { pair: PathBuf },
    /// Print a difference or character spectrum as JSON.
    Spectrum {
        /// Closed-form difference spectrum of T' for this m.
        #[arg(long, requires = "closed_form", value_parser = clap::value_parser!(u32).range(1..=15))]
        m: Option<u32>,
        #[arg(long, requires = "m", conflicts_with = "set")]
        closed_form: bool,
        /// Pair or subset file.
        #[arg(long, required_unless_present = "closed_form")]
        set: Option<PathBuf>,
        /// Which side of a pair file.
        #[arg(long, value_enum, default_value_t = Side::T)]
        which: Side,
        #[arg(long, value_enum, default_value_t = Kind::Diff)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare every closed form against brute force for m = 1..=max-m.
    Selftest {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=3))]
        max_m: u32,
        /// Run against a deliberately broken transform.
        #[arg(long, hide = true)]
        mutate_transform: bool,
    },
    /// Time full character tables; prints CSV.
    Bench {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=5))]
        max_m: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        repeat: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Diff,
    Char,
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, BadInput> {
    match std::env::var("FDK_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(BadInput(anyhow::anyhow!("FDK_THREADS must be a positive integer, got {v:?}"))),
        },
        Err(_) => match flag {
            Some(0) => Err(BadInput(anyhow::anyhow!("--threads must be positive"))),
            other => Ok(other),
        },
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(n) = thread_count(cli.threads)? {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let manifest = cli.manifest;
    match cli.command {
        Command::Construct { m, no_verify, out } => commands::construct(m as usize, !no_verify, out, manifest),
        Command::Verify { pair } => commands::verify(&pair, manifest),
        Command::Spectrum {
            m,
            closed_form: _,
            set,
            which,
            kind,
            out,
        } => match (m, set) {
            (Some(m), None) => commands::closed_form_spectrum(m as usize, out, manifest),
            (None, Some(set)) => commands::set_spectrum(&set, which, kind, out, manifest),
            _ => Err(BadInput(anyhow::anyhow!("give either --m with --closed-form or --set")).into()),
        },
        Command::Selftest {
            max_m,
            mutate_transform,
        } => commands::selftest(max_m as usize, mutate_transform, manifest),
        Command::Bench { max_m, repeat, seed } => commands::bench(max_m as usize, repeat, seed, manifest),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<BadInput>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

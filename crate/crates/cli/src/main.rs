//! `liegen`: root systems, flag-manifold homotopy verdicts, sl(2) clutching
//! degrees and the symplectic compression example from the command line.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liegen_core::Family;

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "liegen", version, about)]
struct Cli {
    /// Output format; JSON goes to stdout, diagnostics to stderr.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Which root subgroups generate: verdicts for every chamber root over all minimal flags.
    Classify {
        /// Family letter, A to G.
        #[arg(value_name = "TYPE")]
        family: Family,
        rank: usize,
        /// Also move every positive root into the chamber and cross-check it.
        #[arg(long)]
        all_roots: bool,
    },
    /// Fundamental group of the minimal flag manifold with NODE removed.
    Pi1 {
        #[arg(value_name = "TYPE")]
        family: Family,
        rank: usize,
        node: usize,
    },
    /// Parity of omega_j(H^vee) for the chamber roots against each minimal flag.
    HomotopyTable {
        #[arg(value_name = "TYPE")]
        family: Family,
        rank: usize,
    },
    /// Clutching degree of the tautological bundle over the sl(2) highest-weight orbit.
    Sl2 {
        n: usize,
        /// Also treat the k-th exterior power of the defining representation.
        #[arg(long)]
        k: Option<usize>,
        /// Points on the unit circle (default max(1024, 16n)).
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Checks that exp(tX) compresses the cone Q(v) >= 0 in sp(l, R).
    SpExample {
        l: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify {
            family,
            rank,
            all_roots,
        } => commands::classify(family, rank, all_roots),
        Command::Pi1 { family, rank, node } => commands::pi1(family, rank, node),
        Command::HomotopyTable { family, rank } => commands::homotopy_table(family, rank),
        Command::Sl2 { n, k, samples } => {
            if n > 30 {
                eprintln!("warning: n = {n} makes n! large; chart arithmetic may be slow");
            }
            commands::sl2(n, k, samples)
        }
        Command::SpExample { l, samples, seed } => commands::sp_example(l, samples, seed),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(outcome.render(cli.format).as_bytes());
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(commands::exit_code(&err) as u8)
        }
    }
}

//! Command-line front end for `symcanon`.
//!
//! Every subcommand writes one report document, `{"command", "status",
//! "payload" | "error"}`, and exits with 0 on success, 2 on invalid input and
//! 3 when the library's own verification of a result fails.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use symcanon::testgen::GenConfig;

use crate::document::{parse_matrix, MatrixDocument};
use crate::error::CliError;
use crate::report::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "symcanon", version, about = "Canonical forms of integer symplectic involutions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Matrix file (JSON document or whitespace grid); stdin when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a matrix is a symplectic involution.
    Verify(InputArgs),
    /// Conjugate a symplectic involution to canonical form.
    Canonicalize(InputArgs),
    /// Eigenlattice ranks, Comessatti character and cohomology ranks.
    Invariants(InputArgs),
    /// Smith normal form with both transforms.
    Smith(InputArgs),
    /// Skew-symmetric Frobenius normal form.
    SkewFrobenius(InputArgs),
    /// Comessatti canonical form of an integral involution.
    Comessatti(InputArgs),
    /// Generate a random symplectic involution with given invariants.
    Generate {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        num_factors: usize,
        #[arg(long, default_value_t = 3)]
        entry_bound: u32,
    },
    /// Quotient data for an involution of a genus-g surface.
    Riemann {
        #[arg(long)]
        genus: usize,
        /// Number of fixed points; lists every admissible case when omitted.
        #[arg(long)]
        fixed_points: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Verify(_) => "verify",
            Command::Canonicalize(_) => "canonicalize",
            Command::Invariants(_) => "invariants",
            Command::Smith(_) => "smith",
            Command::SkewFrobenius(_) => "skew-frobenius",
            Command::Comessatti(_) => "comessatti",
            Command::Generate { .. } => "generate",
            Command::Riemann { .. } => "riemann",
        }
    }
}

fn read_input(args: &InputArgs, stdin: &mut dyn Read) -> Result<MatrixDocument, CliError> {
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    parse_matrix(&text)
}

/// Runs one command to completion, reading matrix input from `stdin` when no
/// `--input` path is given.
pub fn run(command: &Command, stdin: &mut dyn Read) -> Report {
    let with_input = |args: &InputArgs, stdin: &mut dyn Read, f: fn(&MatrixDocument) -> _| {
        read_input(args, stdin).and_then(|doc| f(&doc))
    };
    let outcome = match command {
        Command::Verify(a) => with_input(a, stdin, commands::verify),
        Command::Canonicalize(a) => with_input(a, stdin, commands::canonicalize_cmd),
        Command::Invariants(a) => with_input(a, stdin, commands::invariants),
        Command::Smith(a) => with_input(a, stdin, commands::smith),
        Command::SkewFrobenius(a) => with_input(a, stdin, commands::skew_frobenius_cmd),
        Command::Comessatti(a) => with_input(a, stdin, commands::comessatti),
        Command::Generate { p, m, t, seed, num_factors, entry_bound } => GenConfig::new(*seed, *num_factors, *entry_bound)
            .map_err(CliError::from)
            .and_then(|cfg| commands::generate(*p, *m, *t, cfg)),
        Command::Riemann { genus, fixed_points } => commands::riemann(*genus, *fixed_points),
    };
    Report { command: command.name().to_string(), outcome }
}

//! Argument parsing and dispatch for the `wedderburn` binary.
//!
//! ```text
//! wedderburn decompose|idempotents|code|distance|essential|chartable \
//!     --group sn|an --n N --p P [--f F] [--lambda L] [--json] \
//!     [--threshold T] [--seed S] [--verbose]
//! ```
//!
//! Exit status: 0 on success, 2 on invalid input, 3 when a distance scan
//! exceeded its budget and only bounds were reported.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::Result;
use crate::perm::GroupKind;
use crate::report::{self, exit_code, RunConfig, THRESHOLD_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the Wedderburn blocks.
    Decompose,
    /// Centrally primitive idempotents, one coefficient per conjugacy class.
    Idempotents,
    /// Minimal codes: generator matrix, [n,k,d], essentiality.
    Code,
    /// Minimum distance and weight distribution of each block code.
    Distance,
    /// Essentiality verdicts with witness subgroups.
    Essential,
    /// Exact character table.
    Chartable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Sn,
    An,
}

#[derive(Debug, Parser)]
#[command(
    name = "wedderburn",
    version,
    about = "Wedderburn decompositions, idempotents and minimal codes of F_q S_n and F_q A_n"
)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: u64,
    /// Extension degree of F_q over F_p.
    #[arg(long, default_value_t = 1)]
    f: u32,
    /// Block selector such as `3,1`, `2,2+`, `2,2-`.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    json: bool,
    /// Largest q^k scanned exhaustively; larger codes get sampled bounds.
    #[arg(long, env = THRESHOLD_ENV, default_value_t = crate::codes::DEFAULT_THRESHOLD)]
    threshold: u64,
    /// Seed for the sampling fallback.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-element idempotent coefficients; full-lattice essentiality check.
    #[arg(long)]
    verbose: bool,
}

/// Parses `args` (program name first), runs the command, writes the report
/// to `out` and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = write!(if code == EXIT_OK { &mut *out as &mut dyn Write } else { err }, "{e}");
            return code;
        }
    };
    match execute(&args) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(args: &Args) -> Result<(String, i32)> {
    let group = match args.group {
        GroupArg::Sn => GroupKind::Sn,
        GroupArg::An => GroupKind::An,
    };
    let mut cfg = RunConfig::new(group, args.n, args.p, args.f)?;
    if let Some(l) = &args.lambda {
        cfg = cfg.with_lambda(l)?;
    }
    cfg.threshold = args.threshold;
    cfg.seed = args.seed;
    cfg.verbose = args.verbose;
    let json = args.json;
    Ok(match args.command {
        Command::Decompose => emit(&report::decompose(&cfg, false)?, json, |r| r.to_text(), true),
        Command::Idempotents => emit(&report::decompose(&cfg, true)?, json, |r| r.to_text(), true),
        Command::Code => {
            let r = report::code(&cfg)?;
            let ok = r.certified();
            emit(&r, json, |r| r.to_text(), ok)
        }
        Command::Distance => {
            let r = report::distance(&cfg)?;
            let ok = r.certified();
            emit(&r, json, |r| r.to_text(), ok)
        }
        Command::Essential => emit(&report::essential(&cfg)?, json, |r| r.to_text(), true),
        Command::Chartable => emit(&report::chartable(&cfg)?, json, |r| r.to_text(), true),
    })
}

fn emit<R: Serialize>(r: &R, json: bool, text: impl Fn(&R) -> String, certified: bool) -> (String, i32) {
    let body = if json {
        let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(r)
    };
    (body, if certified { EXIT_OK } else { EXIT_BUDGET })
}

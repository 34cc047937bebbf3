//! Command-line front end: example runners, symbol computation for
//! user-supplied functions, and the verification suites.
//!
//! Exit codes: 0 when the command succeeds and every reported comparison
//! passes, 1 for data errors and failed verifications, 2 for usage errors
//! (bad flags, unknown names, violated preconditions).

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::catalog::{run_example, NamedExample};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::section::Section;
use crate::spectral::{frame_report, spectral_symbol};
use crate::stepfn::StepFunction;
use crate::suites::{run_suite, Suite, DEFAULT_PRIMES};

#[derive(Debug, Parser)]
#[command(
    name = "padic-frames",
    version,
    about = "Frames of translates on the p-adic line: examples, spectral symbols, verification"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a named example configuration and print its JSON report.
    Example {
        /// Configuration name: twoH, twoH2, cH, or cH2.
        name: String,
        /// The prime p.
        #[arg(long)]
        p: u64,
        /// Size parameter n (coset distance exponent) for twoH / twoH2.
        #[arg(long)]
        n: Option<u32>,
        /// Size parameter m (ball radius exponent) for cH / cH2.
        #[arg(long)]
        m: Option<u32>,
        /// Section: "canonical" or the path of a JSON offsets file.
        #[arg(long, default_value = "canonical")]
        section: String,
        /// Also write the symbol values as CSV to this path.
        #[arg(long)]
        out_csv: Option<PathBuf>,
        /// Override the relative tolerance for zero-class detection.
        #[arg(long)]
        tol_rel: Option<f64>,
        /// Override the Gram matrix dimension cap.
        #[arg(long)]
        matrix_cap: Option<usize>,
    },
    /// Compute the spectral symbol and frame report of a step function.
    Phi {
        /// Path of the step function JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Section: "canonical" or the path of a JSON offsets file.
        #[arg(long, default_value = "canonical")]
        section: String,
        /// Write the symbol CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the relative tolerance for zero-class detection.
        #[arg(long)]
        tol_rel: Option<f64>,
    },
    /// Run a verification suite and print one JSON line per check.
    Verify {
        /// Suite name: plancherel, grouplaw, lemmas, gram-phi, or all.
        suite: String,
        /// Restrict to a single prime (default: 2, 3, 5).
        #[arg(long)]
        p: Option<u64>,
        /// Random trials per prime and suite.
        #[arg(long, default_value_t = 25)]
        trials: u32,
        /// Master seed; every emitted line repeats it.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Override the relative tolerance for zero-class detection.
        #[arg(long)]
        tol_rel: Option<f64>,
        /// Override the resolution cap.
        #[arg(long)]
        max_level: Option<u32>,
        /// Override the Gram matrix dimension cap.
        #[arg(long)]
        matrix_cap: Option<usize>,
    },
}

/// Parse arguments from the process environment and execute; returns the
/// process exit code.  Usage errors detected by the argument parser itself
/// exit directly with code 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InvalidParameter(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Example {
            name,
            p,
            n,
            m,
            section,
            out_csv,
            tol_rel,
            matrix_cap,
        } => cmd_example(&name, p, n, m, &section, out_csv, tol_rel, matrix_cap),
        Command::Phi {
            input,
            section,
            out,
            tol_rel,
        } => cmd_phi(&input, &section, out, tol_rel),
        Command::Verify {
            suite,
            p,
            trials,
            seed,
            tol_rel,
            max_level,
            matrix_cap,
        } => cmd_verify(&suite, p, trials, seed, tol_rel, max_level, matrix_cap),
    }
}

/// Load a section offsets specification: a JSON object mapping canonical
/// representative strings ("num/p^e") to integral offsets.
fn load_offsets(section: &str) -> Result<Vec<(String, i64)>> {
    if section == "canonical" {
        return Ok(Vec::new());
    }
    let text = std::fs::read_to_string(section)?;
    let map: std::collections::BTreeMap<String, i64> = serde_json::from_str(&text)?;
    Ok(map.into_iter().collect())
}

fn section_from_offsets(
    ctx: crate::group::GroupContext,
    offsets: &[(String, i64)],
) -> Result<Section> {
    if offsets.is_empty() {
        return Ok(Section::canonical(ctx));
    }
    let mut map = std::collections::BTreeMap::new();
    for (key, delta) in offsets {
        let rep = crate::padic::parse_rational(ctx.prime(), key)?;
        map.insert(
            rep,
            crate::padic::PAdicRational::from_integer(ctx.prime(), *delta),
        );
    }
    Section::with_offsets(ctx, map)
}

#[allow(clippy::too_many_arguments)]
fn cmd_example(
    name: &str,
    p: u64,
    n: Option<u32>,
    m: Option<u32>,
    section: &str,
    out_csv: Option<PathBuf>,
    tol_rel: Option<f64>,
    matrix_cap: Option<usize>,
) -> Result<i32> {
    let example = NamedExample::parse(name)?;
    let size = match (example, n, m) {
        (NamedExample::TwoCosets | NamedExample::TwoCosetsDyadic, Some(n), None) => n,
        (NamedExample::ScaledSmallBall | NamedExample::WideBall, None, Some(m)) => m,
        (NamedExample::TwoCosets | NamedExample::TwoCosetsDyadic, _, _) => {
            return Err(Error::InvalidParameter(format!(
                "example {name} takes --n (and not --m)"
            )))
        }
        (NamedExample::ScaledSmallBall | NamedExample::WideBall, _, _) => {
            return Err(Error::InvalidParameter(format!(
                "example {name} takes --m (and not --n)"
            )))
        }
    };
    let config = Config::from_environment()?.with_overrides(tol_rel, None, matrix_cap)?;
    let offsets = load_offsets(section)?;
    let run = run_example(
        example,
        p,
        size,
        &offsets,
        config.tol_rel,
        config.matrix_cap,
    )?;
    if let Some(path) = out_csv {
        std::fs::write(path, run.symbol.to_csv())?;
    }
    println!("{}", serde_json::to_string(&run.report)?);
    Ok(if run.report.matches_expected { 0 } else { 1 })
}

fn cmd_phi(
    input: &PathBuf,
    section: &str,
    out: Option<PathBuf>,
    tol_rel: Option<f64>,
) -> Result<i32> {
    let config = Config::from_environment()?.with_overrides(tol_rel, None, None)?;
    let text = std::fs::read_to_string(input)?;
    // Defects inside the data file are data errors (exit 1), not usage
    // errors, whichever variant the validation layer produced.
    let f = StepFunction::from_json(&text).map_err(|err| match err {
        Error::Parse(_) | Error::Json(_) => err,
        other => Error::Parse(format!("invalid step function: {other}")),
    })?;
    let offsets = load_offsets(section)?;
    let section = section_from_offsets(f.context(), &offsets)?;
    let phi = spectral_symbol(&f, &section)?;
    let report = frame_report(&phi, config.tol_rel)?;
    match out {
        Some(path) => std::fs::write(path, phi.to_csv())?,
        None => print!("{}", phi.to_csv()),
    }
    println!("{}", serde_json::to_string(&report)?);
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    p: Option<u64>,
    trials: u32,
    seed: u64,
    tol_rel: Option<f64>,
    max_level: Option<u32>,
    matrix_cap: Option<usize>,
) -> Result<i32> {
    let suite = Suite::parse(suite)?;
    let config = Config::from_environment()?.with_overrides(tol_rel, max_level, matrix_cap)?;
    let primes: Vec<u64> = match p {
        Some(p) => vec![p],
        None => DEFAULT_PRIMES.to_vec(),
    };
    let outcome = run_suite(suite, &primes, trials, seed, &config)?;
    for line in outcome.lines() {
        println!("{}", serde_json::to_string(line)?);
    }
    println!("{}", serde_json::to_string(&outcome.summary())?);
    Ok(if outcome.all_pass() { 0 } else { 1 })
}

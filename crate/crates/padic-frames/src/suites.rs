//! Seeded verification suites behind the `verify` subcommand.
//!
//! Each suite replays a family of identities on random inputs and emits one
//! line per check.  Lines are produced in a fixed order (prime, then trial,
//! then check name) and every line carries the master seed, so any failure
//! is reproducible by rerunning the same command.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fourier::{fourier, fourier_fast, inverse_fourier_fast};
use crate::oracle::{
    check_frame_sum_consistency, check_frame_sum_identity, check_synthesis_norm, gram_matrix,
    hermitian_eigenvalues,
};
use crate::padic::{character, PAdicRational};
use crate::pruefer::{pruefer_add, PrueferElement};
use crate::sampling::{random_section, random_step_function, random_trig_polynomial};
use crate::spectral::spectral_symbol;
use crate::stepfn::StepFunction;
use crate::translates::{pointwise_shift, translate};

/// Tolerance for exact structural identities (transform inversion,
/// translation algebra): everything is a finite sum of unit phases, so only
/// rounding noise remains.
const STRUCTURAL_TOL: f64 = 1e-12;

/// Tolerance for the synthesis and frame-sum identities.
const LEMMA_TOL: f64 = 1e-10;

/// Tolerance for matching the Gram spectrum against symbol values.
const GRAM_TOL: f64 = 1e-8;

/// Primes the suites cover when no prime is pinned on the command line.
pub const DEFAULT_PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Plancherel,
    GroupLaw,
    Lemmas,
    GramPhi,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Plancherel,
        Suite::GroupLaw,
        Suite::Lemmas,
        Suite::GramPhi,
        Suite::All,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            Suite::Plancherel => "plancherel",
            Suite::GroupLaw => "grouplaw",
            Suite::Lemmas => "lemmas",
            Suite::GramPhi => "gram-phi",
            Suite::All => "all",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|suite| suite.token() == name)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown suite '{name}'; expected one of plancherel, grouplaw, lemmas, \
                     gram-phi, all"
                ))
            })
    }
}

/// One verification check: which identity, on which inputs, how far off.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub suite: &'static str,
    pub check: &'static str,
    pub p: u64,
    pub trial: u32,
    pub seed: u64,
    pub rel_error: f64,
    pub pass: bool,
}

/// All lines emitted by a suite run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    suite: Suite,
    lines: Vec<CheckLine>,
}

/// The trailing summary line of a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub pass: bool,
}

impl SuiteOutcome {
    pub fn lines(&self) -> &[CheckLine] {
        &self.lines
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|line| !line.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self) -> SuiteSummary {
        SuiteSummary {
            suite: self.suite.token(),
            checks: self.lines.len(),
            failures: self.failures(),
            pass: self.all_pass(),
        }
    }
}

/// Run a suite over the given primes with `trials` random draws per prime.
pub fn run_suite(
    suite: Suite,
    primes: &[u64],
    trials: u32,
    seed: u64,
    config: &Config,
) -> Result<SuiteOutcome> {
    let mut lines = Vec::new();
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::Plancherel, Suite::GroupLaw, Suite::Lemmas, Suite::GramPhi],
        _ => std::slice::from_ref(&suite),
    };
    for &part in parts {
        for &p in primes {
            let mut rng = stream_for(part, p, seed);
            for trial in 0..trials {
                let run = |check: &'static str, rel_error: f64, tol: f64| CheckLine {
                    suite: part.token(),
                    check,
                    p,
                    trial,
                    seed,
                    rel_error,
                    pass: rel_error <= tol,
                };
                match part {
                    Suite::Plancherel => {
                        plancherel_trial(p, config, &mut rng, &run, &mut lines)?
                    }
                    Suite::GroupLaw => group_law_trial(p, config, &mut rng, &run, &mut lines)?,
                    Suite::Lemmas => lemma_trial(p, config, &mut rng, &run, &mut lines)?,
                    Suite::GramPhi => gram_phi_trial(p, config, &mut rng, &run, &mut lines)?,
                    Suite::All => unreachable!("the aggregate suite was expanded above"),
                }
            }
        }
    }
    Ok(SuiteOutcome { suite, lines })
}

/// An independent, reproducible random stream per (suite, prime) pair.
fn stream_for(suite: Suite, p: u64, seed: u64) -> ChaCha8Rng {
    let tag = Suite::ALL
        .iter()
        .position(|s| s == &suite)
        .expect("suite is listed") as u64;
    ChaCha8Rng::seed_from_u64(
        seed ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ tag.wrapping_mul(0xD1B5_4A32_D192_ED03),
    )
}

fn sup_value(f: &StepFunction) -> f64 {
    f.coeffs()
        .iter()
        .map(|c| c.norm())
        .fold(f64::MIN_POSITIVE, f64::max)
}

fn plancherel_trial(
    p: u64,
    config: &Config,
    rng: &mut ChaCha8Rng,
    line: &dyn Fn(&'static str, f64, f64) -> CheckLine,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let ctx = config.context(p)?;
    let support = rng.gen_range(0..=2);
    let constancy = rng.gen_range(if support == 0 { 1..=2 } else { 0..=2 });
    let f = random_step_function(ctx, support, constancy, rng)?;

    let spectrum = fourier_fast(&f);
    let energy = (spectrum.norm_sq() - f.norm_sq()).abs() / f.norm_sq();
    out.push(line("plancherel", energy, STRUCTURAL_TOL));

    let roundtrip = inverse_fourier_fast(&spectrum);
    let inversion = roundtrip.sup_distance(&f)? / sup_value(&f);
    out.push(line("inversion", inversion, STRUCTURAL_TOL));

    let reference = fourier(&f);
    let agreement = spectrum.sup_distance(&reference)? / sup_value(&reference);
    out.push(line("fast-reference", agreement, STRUCTURAL_TOL));
    Ok(())
}

fn random_class(p: u64, max_level: u32, rng: &mut ChaCha8Rng) -> PrueferElement {
    let level = rng.gen_range(0..=max_level);
    let order = (p as u64).pow(level);
    PrueferElement::new(p, rng.gen_range(0..order), level)
}

fn group_law_trial(
    p: u64,
    config: &Config,
    rng: &mut ChaCha8Rng,
    line: &dyn Fn(&'static str, f64, f64) -> CheckLine,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let ctx = config.context(p)?;
    let section = random_section(ctx, 1, rng)?;

    let f = random_step_function(ctx, 1, 1, rng)?;
    let a = random_class(p, 2, rng);
    let b = random_class(p, 2, rng);
    let composed = translate(&translate(&f, &b, &section)?, &a, &section)?;
    let joint = translate(&f, &pruefer_add(&a, &b)?, &section)?;
    let composition = composed.sup_distance(&joint)? / sup_value(&f);
    out.push(line("composition", composition, STRUCTURAL_TOL));

    // A modulated ball indicator translates to the shifted indicator times
    // the phase (b, sigma_beta), for any representative point b of the class.
    let n2 = ctx.grid_size(2) as i64;
    let center = PAdicRational::new(p, rng.gen_range(0..n2), 2);
    let beta = PAdicRational::new(p, rng.gen_range(0..n2), 2);
    let g = StepFunction::indicator(ctx, &center, 0, Some(&beta))?;
    let class = random_class(p, 2, rng);
    let b_point =
        class.representative() + PAdicRational::from_integer(p, rng.gen_range(0..=1));
    let phase = character(&b_point, &section.representative(&beta));
    let expected = pointwise_shift(&g, &b_point)?.scale(phase);
    let translated = translate(&g, &class, &section)?;
    let modulation = translated.sup_distance(&expected)? / sup_value(&g);
    out.push(line("modulation", modulation, STRUCTURAL_TOL));
    Ok(())
}

fn lemma_trial(
    p: u64,
    config: &Config,
    rng: &mut ChaCha8Rng,
    line: &dyn Fn(&'static str, f64, f64) -> CheckLine,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let ctx = config.context(p)?;
    let section = random_section(ctx, 1, rng)?;
    let f = random_step_function(ctx, 1, 1, rng)?;
    let theta = random_trig_polynomial(ctx, 2, rng)?;

    let synthesis = check_synthesis_norm(&f, &theta, &section, LEMMA_TOL)?;
    out.push(line("synthesis-norm", synthesis.rel_error, LEMMA_TOL));

    let frame_sum = check_frame_sum_identity(&f, &theta, &section, LEMMA_TOL)?;
    out.push(line("frame-sum-symbol", frame_sum.rel_error, LEMMA_TOL));

    let g = random_step_function(ctx, 1, 2, rng)?;
    let consistency = check_frame_sum_consistency(&g, &f, &section, LEMMA_TOL)?;
    out.push(line("frame-sum-enumeration", consistency.rel_error, LEMMA_TOL));
    Ok(())
}

fn gram_phi_trial(
    p: u64,
    config: &Config,
    rng: &mut ChaCha8Rng,
    line: &dyn Fn(&'static str, f64, f64) -> CheckLine,
    out: &mut Vec<CheckLine>,
) -> Result<()> {
    let ctx = config.context(p)?;
    // Keep the dense matrix small: p^m translates with p^m <= 25.
    let max_m = (1u32..)
        .take_while(|&m| (p as u128).pow(m) <= 25)
        .last()
        .unwrap_or(1);
    let support = rng.gen_range(1..=max_m);
    let constancy = rng.gen_range(0..=1);
    let f = random_step_function(ctx, support, constancy, rng)?;
    let section = random_section(ctx, 1, rng)?;

    let gram = gram_matrix(&f, &section, support, config.matrix_cap)?;
    let eigenvalues = hermitian_eigenvalues(&gram)?;
    let phi = spectral_symbol(&f, &section)?;
    let mut symbol_values = phi.real_values_at_level(support)?;
    symbol_values.sort_by(|a, b| a.partial_cmp(b).expect("symbol values are finite"));
    let scale = symbol_values
        .iter()
        .fold(f64::MIN_POSITIVE, |acc, v| acc.max(v.abs()));
    let diff = eigenvalues
        .iter()
        .zip(symbol_values.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
        / scale;
    out.push(line("eigenvalues-match-symbol", diff, GRAM_TOL));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_tokens_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::parse(suite.token()).unwrap(), suite);
        }
        assert!(Suite::parse("bogus").is_err());
    }

    #[test]
    fn every_suite_passes_on_default_configuration() {
        let config = Config::default();
        for suite in [Suite::Plancherel, Suite::GroupLaw, Suite::Lemmas, Suite::GramPhi] {
            let outcome = run_suite(suite, &[2, 3], 4, 11, &config).unwrap();
            assert!(
                outcome.all_pass(),
                "suite {} failed: {:?}",
                suite.token(),
                outcome
                    .lines()
                    .iter()
                    .filter(|l| !l.pass)
                    .collect::<Vec<_>>()
            );
            let summary = outcome.summary();
            assert_eq!(summary.checks, outcome.lines().len());
            assert_eq!(summary.failures, 0);
        }
    }

    #[test]
    fn aggregate_suite_concatenates_in_fixed_order() {
        let config = Config::default();
        let outcome = run_suite(Suite::All, &[2], 2, 3, &config).unwrap();
        let order: Vec<&str> = outcome.lines().iter().map(|l| l.suite).collect();
        let mut expected = Vec::new();
        expected.extend(std::iter::repeat("plancherel").take(6));
        expected.extend(std::iter::repeat("grouplaw").take(4));
        expected.extend(std::iter::repeat("lemmas").take(6));
        expected.extend(std::iter::repeat("gram-phi").take(2));
        assert_eq!(order, expected);
        assert!(outcome.all_pass());
    }

    #[test]
    fn reruns_reproduce_identical_lines() {
        let config = Config::default();
        let a = run_suite(Suite::Lemmas, &[3], 3, 19, &config).unwrap();
        let b = run_suite(Suite::Lemmas, &[3], 3, 19, &config).unwrap();
        let text_a: Vec<String> = a
            .lines()
            .iter()
            .map(|l| serde_json::to_string(l).unwrap())
            .collect();
        let text_b: Vec<String> = b
            .lines()
            .iter()
            .map(|l| serde_json::to_string(l).unwrap())
            .collect();
        assert_eq!(text_a, text_b);
    }

    #[test]
    fn check_lines_serialize_with_the_expected_fields() {
        let config = Config::default();
        let outcome = run_suite(Suite::Plancherel, &[2], 1, 5, &config).unwrap();
        let text = serde_json::to_string(&outcome.lines()[0]).unwrap();
        for key in ["suite", "check", "\"p\"", "trial", "seed", "rel_error", "pass"] {
            assert!(text.contains(key), "missing {key} in {text}");
        }
    }
}

//! Brute-force verification layer for the spectral machinery.
//!
//! Everything here recomputes a quantity that `spectral` obtains through the
//! symbol by direct enumeration instead: synthesis operators as literal sums
//! of translates, frame sums as sums of inner products, and the Gram matrix
//! of a translate family with its spectrum from a dense eigensolver.  The
//! check functions pair one route of each kind against the other and report
//! the relative error, so a regression in either route shows up as a failed
//! comparison rather than two consistently wrong numbers.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::jacobi;
use crate::padic::{character, PAdicRational};
use crate::pruefer::{classes_up_to_level, PrueferElement};
use crate::sampling::random_trig_polynomial;
use crate::section::Section;
use crate::spectral::{
    cross_symbol, fourier_coefficients, frame_report, spectral_symbol, FrameReport, SpectralSymbol,
};
use crate::stepfn::StepFunction;
use crate::translates::translate;

/// Default bound on the dimension of an explicitly stored Gram matrix.
pub const DEFAULT_MATRIX_CAP: usize = 243;

/// Relative tolerance for the structural self-checks on a freshly built
/// Gram matrix (Hermitian symmetry and dependence on index differences).
const GRAM_STRUCTURE_TOL: f64 = 1e-8;

/// A finite linear combination of characters indexed by quotient classes,
/// `theta(eta) = sum_x c_x * conj((x, eta))`, viewed as a function on the
/// dual ball.  These are the test functions of the verification layer: the
/// same coefficients drive a synthesis operator on the group side.
#[derive(Debug, Clone)]
pub struct TrigPolynomial {
    ctx: GroupContext,
    coeffs: BTreeMap<PrueferElement, Complex64>,
}

impl TrigPolynomial {
    pub fn new(
        ctx: GroupContext,
        coeffs: BTreeMap<PrueferElement, Complex64>,
    ) -> Result<Self> {
        for class in coeffs.keys() {
            ctx.require_same_prime(class.prime())?;
            if class.level() > ctx.max_level() {
                return Err(Error::ResolutionOverflow {
                    required: class.level(),
                    max_level: ctx.max_level(),
                });
            }
        }
        let coeffs = coeffs
            .into_iter()
            .filter(|(_, c)| c.norm_sqr() != 0.0)
            .collect();
        Ok(Self { ctx, coeffs })
    }

    /// The polynomial that evaluates to the indicator of one residue class
    /// of level `level` on the dual ball: all p^level coefficients, each of
    /// modulus p^-level.  The level is explicit because the target set
    /// `residue + p^level Z_p` shrinks with the level even when the residue
    /// is divisible by p.
    pub fn class_indicator(ctx: GroupContext, level: u32, residue: u64) -> Result<Self> {
        ctx.check_resolution(level)?;
        let n = ctx.grid_size(level) as u64;
        if residue >= n {
            return Err(Error::InvalidParameter(format!(
                "residue {residue} is out of range for {n} classes of level {level}"
            )));
        }
        let e = residue;
        let weight = 1.0 / n as f64;
        let coeffs = (0..n)
            .map(|t| {
                let phase = Complex64::cis(TAU * ((t * e) % n) as f64 / n as f64);
                (PrueferElement::new(ctx.prime(), t, level), weight * phase)
            })
            .collect();
        Ok(Self { ctx, coeffs })
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn coeffs(&self) -> &BTreeMap<PrueferElement, Complex64> {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Finest class level appearing among the coefficients.
    pub fn max_level(&self) -> u32 {
        self.coeffs.keys().map(|c| c.level()).max().unwrap_or(0)
    }

    /// Evaluate on the dual ball as a step function constant on classes of
    /// level max(level, own level).
    pub fn evaluate(&self, level: u32) -> Result<StepFunction> {
        let level = level.max(self.max_level());
        self.ctx.check_resolution(level)?;
        let n = self.ctx.grid_size(level);
        let terms: Vec<(PAdicRational, Complex64)> = self
            .coeffs
            .iter()
            .map(|(class, c)| (class.representative(), *c))
            .collect();
        let values = (0..n)
            .map(|e| {
                let eta = PAdicRational::from_integer(self.ctx.prime(), e as i64);
                terms
                    .iter()
                    .map(|(rep, c)| c * character(rep, &eta).conj())
                    .sum()
            })
            .collect();
        StepFunction::new(self.ctx, 0, level, values)
    }
}

/// The synthesis operator: `sum_x c_x * (translate of f by x)` with the
/// polynomial's coefficients, one honest translate per term.
pub fn synthesize(
    f: &StepFunction,
    theta: &TrigPolynomial,
    section: &Section,
) -> Result<StepFunction> {
    f.context().require_same_prime(theta.context().prime())?;
    f.context().require_same_prime(section.context().prime())?;
    let mut acc: Option<StepFunction> = None;
    for (class, c) in theta.coeffs() {
        let term = translate(f, class, section)?.scale(*c);
        acc = Some(match acc {
            None => term,
            Some(sum) => sum.add(&term)?,
        });
    }
    match acc {
        Some(sum) => Ok(sum),
        None => StepFunction::zero(f.context(), f.support_level(), f.constancy_level()),
    }
}

/// Total squared correlation of g against the translate family of f,
/// computed through the cross symbol's coefficient expansion.
pub fn frame_sum(g: &StepFunction, f: &StepFunction, section: &Section) -> Result<f64> {
    let phi = cross_symbol(g, f, section)?;
    Ok(fourier_coefficients(&phi)
        .values()
        .map(|c| c.norm_sqr())
        .sum())
}

/// The same quantity summed term by term: every class up to the common
/// constancy level contributes |<g, translate of f>|^2.  Classes beyond
/// that level correlate to zero, so the finite sum is the whole sum.
pub fn frame_sum_by_enumeration(
    g: &StepFunction,
    f: &StepFunction,
    section: &Section,
) -> Result<f64> {
    g.context().require_same_prime(f.prime())?;
    g.context().require_same_prime(section.context().prime())?;
    let level = g.support_level().max(f.support_level());
    let mut total = 0.0;
    for class in classes_up_to_level(g.prime(), level) {
        let shifted = translate(f, &class, section)?;
        total += g.inner(&shifted)?.norm_sqr();
    }
    Ok(total)
}

/// Dense Gram matrix of the translates indexed by the classes of level
/// `level`, entry (i, j) = <translate by x_j, translate by x_i>.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    level: u32,
    dim: usize,
    entries: Vec<Complex64>,
}

impl GramMatrix {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Largest deviation from Hermitian symmetry, in absolute value.
    pub fn max_hermitian_defect(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (self.entry(i, j) - self.entry(j, i).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of entry (i, j) from the first-column entry at
    /// index (i - j) mod dim.  Translation invariance of the inner product
    /// makes the matrix circulant; this measures how exactly.
    pub fn max_circulant_defect(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let d = (i + n - j) % n;
                (self.entry(i, j) - self.entry(d, 0)).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// Build the Gram matrix of the level-`level` translate family of f.
///
/// The level must resolve the generator (level >= support level of f), and
/// the dimension p^level must stay within `cap`.  The assembled matrix is
/// checked for Hermitian symmetry and circulant structure before being
/// returned; a failure of either indicates a broken translation operator.
pub fn gram_matrix(
    f: &StepFunction,
    section: &Section,
    level: u32,
    cap: usize,
) -> Result<GramMatrix> {
    f.context().require_same_prime(section.context().prime())?;
    if level < f.support_level() {
        return Err(Error::InvalidParameter(format!(
            "translate grid of level {level} does not resolve a generator supported at level {}",
            f.support_level()
        )));
    }
    f.context().check_resolution(level)?;
    let dim = f.context().grid_size(level);
    if dim > cap {
        return Err(Error::MatrixCapExceeded { size: dim, cap });
    }
    let translates: Vec<StepFunction> = classes_up_to_level(f.prime(), level)
        .iter()
        .map(|class| translate(f, class, section))
        .collect::<Result<_>>()?;
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            entries[i * dim + j] = translates[j].inner(&translates[i])?;
        }
    }
    let gram = GramMatrix {
        level,
        dim,
        entries,
    };
    let scale = gram
        .entries
        .iter()
        .map(|c| c.norm())
        .fold(f64::MIN_POSITIVE, f64::max);
    if gram.max_hermitian_defect() > GRAM_STRUCTURE_TOL * scale {
        return Err(Error::NotHermitian {
            max_asymmetry: gram.max_hermitian_defect(),
        });
    }
    if gram.max_circulant_defect() > GRAM_STRUCTURE_TOL * scale {
        return Err(Error::InvalidParameter(format!(
            "translate Gram matrix lost its circulant structure (defect {:e})",
            gram.max_circulant_defect()
        )));
    }
    Ok(gram)
}

/// Ascending eigenvalues of a Gram matrix via cyclic Jacobi rotations.
pub fn hermitian_eigenvalues(gram: &GramMatrix) -> Result<Vec<f64>> {
    Ok(jacobi::hermitian_eigen(&gram.entries, gram.dim)?
        .values()
        .to_vec())
}

/// Outcome of comparing two routes to the same quantity.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_error: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CheckReport {
    fn from_pair(lhs: f64, rhs: f64, tol: f64) -> Self {
        let scale = lhs.abs().max(rhs.abs()).max(f64::MIN_POSITIVE);
        let rel_error = (lhs - rhs).abs() / scale;
        Self {
            lhs,
            rhs,
            rel_error,
            pass: rel_error <= tol,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// Integral of |theta|^2 * phi^power over the dual ball at the common
/// constancy level.
fn weighted_energy(theta: &StepFunction, phi: &SpectralSymbol, power: i32) -> Result<f64> {
    let level = theta.constancy_level().max(phi.level());
    let theta = theta.refine(0, level)?;
    let phi_values = phi.real_values_at_level(level)?;
    let weight = 1.0 / theta.context().grid_size(level) as f64;
    Ok(theta
        .coeffs()
        .iter()
        .zip(phi_values)
        .map(|(t, v)| t.norm_sqr() * v.powi(power))
        .sum::<f64>()
        * weight)
}

/// Squared norm of the synthesized function versus the weighted energy
/// integral of its coefficient polynomial against the spectral symbol.
pub fn check_synthesis_norm(
    f: &StepFunction,
    theta: &TrigPolynomial,
    section: &Section,
    tol: f64,
) -> Result<CheckReport> {
    let lhs = synthesize(f, theta, section)?.norm_sq();
    let phi = spectral_symbol(f, section)?;
    let theta_fn = theta.evaluate(phi.level())?;
    let rhs = weighted_energy(&theta_fn, &phi, 1)?;
    Ok(CheckReport::from_pair(lhs, rhs, tol))
}

/// Frame sum of the synthesized function versus the weighted energy
/// integral against the squared symbol.
pub fn check_frame_sum_identity(
    f: &StepFunction,
    theta: &TrigPolynomial,
    section: &Section,
    tol: f64,
) -> Result<CheckReport> {
    let g = synthesize(f, theta, section)?;
    let lhs = frame_sum(&g, f, section)?;
    let phi = spectral_symbol(f, section)?;
    let theta_fn = theta.evaluate(phi.level())?;
    let rhs = weighted_energy(&theta_fn, &phi, 2)?;
    Ok(CheckReport::from_pair(lhs, rhs, tol))
}

/// The coefficient-expansion frame sum versus the enumerated one.
pub fn check_frame_sum_consistency(
    g: &StepFunction,
    f: &StepFunction,
    section: &Section,
    tol: f64,
) -> Result<CheckReport> {
    let lhs = frame_sum(g, f, section)?;
    let rhs = frame_sum_by_enumeration(g, f, section)?;
    Ok(CheckReport::from_pair(lhs, rhs, tol))
}

/// Result of stress-testing the two-sided frame inequality with random
/// coefficient polynomials plus deliberate attainment probes.
#[derive(Debug, Clone, Serialize)]
pub struct FrameInequalityReport {
    pub trials: u32,
    pub violations: u32,
    pub max_relative_violation: f64,
    pub lower_attained: bool,
    pub upper_attained: bool,
    pub seed: u64,
    pub bounds: FrameReport,
}

/// Sample random coefficient polynomials and test the sandwich
/// `A * I1 <= I2 <= B * I1` with `I1 = integral |theta|^2 phi` and
/// `I2 = integral |theta|^2 phi^2`; then aim one class indicator at the
/// extreme classes of the symbol to verify both bounds are attained.
pub fn check_frame_inequality(
    f: &StepFunction,
    section: &Section,
    trials: u32,
    seed: u64,
    tol_rel: f64,
) -> Result<FrameInequalityReport> {
    let phi = spectral_symbol(f, section)?;
    let bounds = frame_report(&phi, tol_rel)?;
    let ctx = f.context();
    let sample_level = (phi.level() + 1).min(ctx.max_level());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0u32;
    let mut max_violation = 0.0f64;
    for _ in 0..trials {
        let theta = random_trig_polynomial(ctx, sample_level, &mut rng)?;
        let theta_fn = theta.evaluate(phi.level())?;
        let i1 = weighted_energy(&theta_fn, &phi, 1)?;
        let i2 = weighted_energy(&theta_fn, &phi, 2)?;
        let scale = (bounds.upper * i1).max(f64::MIN_POSITIVE);
        let low_gap = (bounds.lower * i1 - i2) / scale;
        let high_gap = (i2 - bounds.upper * i1) / scale;
        let worst = low_gap.max(high_gap);
        max_violation = max_violation.max(worst);
        if worst > tol_rel {
            violations += 1;
        }
    }

    // Attainment: the ratio I2 / I1 of a class indicator equals the symbol
    // value on that class, so the extreme classes reach A and B.
    let values = phi.real_values_at_level(phi.level())?;
    let max_value = values.iter().cloned().fold(0.0, f64::max);
    let threshold = tol_rel * max_value;
    let mut extreme: Option<(usize, usize)> = None;
    for (e, &v) in values.iter().enumerate() {
        if v <= threshold {
            continue;
        }
        extreme = Some(match extreme {
            None => (e, e),
            Some((lo, hi)) => (
                if v < values[lo] { e } else { lo },
                if v > values[hi] { e } else { hi },
            ),
        });
    }
    let mut lower_attained = false;
    let mut upper_attained = false;
    if let Some((lo, hi)) = extreme {
        let tol_attain = tol_rel * bounds.upper.max(1.0);
        let ratio_of = |e: usize| -> Result<f64> {
            let theta = TrigPolynomial::class_indicator(ctx, phi.level(), e as u64)?;
            let theta_fn = theta.evaluate(phi.level())?;
            let i1 = weighted_energy(&theta_fn, &phi, 1)?;
            let i2 = weighted_energy(&theta_fn, &phi, 2)?;
            Ok(i2 / i1)
        };
        lower_attained = (ratio_of(lo)? - bounds.lower).abs() <= tol_attain;
        upper_attained = (ratio_of(hi)? - bounds.upper).abs() <= tol_attain;
    }

    Ok(FrameInequalityReport {
        trials,
        violations,
        max_relative_violation: max_violation,
        lower_attained,
        upper_attained,
        seed,
        bounds,
    })
}

//! The spectral symbol of a generator and the frame criterion it encodes.
//!
//! For step functions f, g and a section C of the frequency quotient, the
//! cross symbol is the periodization
//!
//!   Phi_{C,f}(g)(eta) = sum_{sigma in C} ghat(eta + sigma) conj(fhat(eta + sigma)),
//!
//! a function of eta in Z_p.  With g = f it is real and nonnegative, and its
//! essential range off its zero set carries the whole frame structure of the
//! translates of f: the translates form a frame for their closed span with
//! bounds A and B exactly when A <= Phi <= B off the zero set.  Because a
//! step function's symbol takes finitely many values, the report below reads
//! the bounds straight off the value multiset.
//!
//! The Fourier coefficients of the symbol against the characters of Z_p
//! recover the inner products of g with every translate of f; that identity
//! is the bridge between this module and the brute-force oracle layer.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{fourier_fast, inverse_fourier_fast};
use crate::padic::{pow_i128, PAdicRational};
use crate::pruefer::PrueferElement;
use crate::section::Section;
use crate::stepfn::StepFunction;

/// A periodized symbol: a step function on Z_p (support level 0), constant
/// on cosets of p^level Z_p.  Self-symbols are exactly real; cross symbols
/// are genuinely complex valued.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSymbol {
    fun: StepFunction,
}

impl SpectralSymbol {
    fn new(fun: StepFunction) -> Self {
        debug_assert_eq!(fun.support_level(), 0);
        SpectralSymbol { fun }
    }

    pub fn prime(&self) -> u64 {
        self.fun.prime()
    }

    /// The constancy level: the symbol is determined by its values on the
    /// p^level classes of Z_p / p^level Z_p.
    pub fn level(&self) -> u32 {
        self.fun.constancy_level()
    }

    pub fn class_count(&self) -> usize {
        self.fun.len()
    }

    /// The value on the class of the integer e (coefficient e).
    pub fn value(&self, class: usize) -> Complex64 {
        self.fun.coeffs()[class]
    }

    pub fn values(&self) -> &[Complex64] {
        self.fun.coeffs()
    }

    /// The integral over Z_p: the mean of the class values.
    pub fn integral(&self) -> Complex64 {
        self.fun.integral()
    }

    pub fn as_step_function(&self) -> &StepFunction {
        &self.fun
    }

    /// Real parts of the class values after re-reading the symbol at a finer
    /// class level (each value repeats p^(target - level) times).
    pub fn real_values_at_level(&self, level: u32) -> Result<Vec<f64>> {
        let fine = self.fun.refine(0, level)?;
        Ok(fine.coeffs().iter().map(|c| c.re).collect())
    }

    /// Largest deviation from a real-valued symbol.
    pub fn max_imaginary_part(&self) -> f64 {
        self.fun
            .coeffs()
            .iter()
            .map(|c| c.im.abs())
            .fold(0.0, f64::max)
    }

    /// Two-column CSV of the class values: `eta_class,value` with one row
    /// per class of Z_p / p^level Z_p.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("eta_class,value\n");
        for (e, c) in self.fun.coeffs().iter().enumerate() {
            out.push_str(&format!("{e},{:?}\n", c.re));
        }
        out
    }
}

/// The cross symbol of g against f under a section.  Both functions are
/// transformed, refined to a common frequency resolution (K, M), and
/// periodized over the p^K section representatives that meet the spectra;
/// the result is constant on classes of level M.
pub fn cross_symbol(
    g: &StepFunction,
    f: &StepFunction,
    section: &Section,
) -> Result<SpectralSymbol> {
    g.context().require_same_prime(f.prime())?;
    g.context().require_same_prime(section.context().prime())?;
    let (ghat, fhat) = fourier_fast(g).common_refinement(&fourier_fast(f))?;
    let p = ghat.prime();
    let big_k = ghat.support_level();
    let big_m = ghat.constancy_level();
    let sigma_count = ghat.context().grid_size(big_k);
    let n = ghat.len();

    // Integer offset of the section representative over the canonical one,
    // per frequency coset sigma_can = j' p^{-K}.  Shifting the evaluation
    // point by d moves the grid index by d p^K.
    let index_shift: Vec<i128> = (0..sigma_count)
        .map(|j| {
            let sigma_can = PAdicRational::new(p, j as i64, big_k);
            let delta = section.representative(&sigma_can) - sigma_can;
            debug_assert!(delta.is_integral());
            delta.numerator() as i128 * pow_i128(p, big_k)
        })
        .collect();

    let classes = ghat.context().grid_size(big_m);
    let mut values = vec![Complex64::new(0.0, 0.0); classes];
    for (e, slot) in values.iter_mut().enumerate() {
        let base = (e * sigma_count) as i128;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, shift) in index_shift.iter().enumerate() {
            let idx = (base + j as i128 + shift).rem_euclid(n as i128) as usize;
            acc += ghat.coeffs()[idx] * fhat.coeffs()[idx].conj();
        }
        *slot = acc;
    }
    let fun = StepFunction::new(ghat.context(), 0, big_m, values)?;
    Ok(SpectralSymbol::new(fun))
}

/// The symbol of f itself: real, nonnegative, and the frame criterion's
/// entire input.
pub fn spectral_symbol(f: &StepFunction, section: &Section) -> Result<SpectralSymbol> {
    cross_symbol(f, f, section)
}

/// Fourier coefficients of a symbol against the characters of Z_p, indexed
/// by the classes [x] of level up to the symbol's class level.  For a cross
/// symbol of (g, f) the coefficient at [x] is exactly the inner product of g
/// with the translate of f by [x]; every class of higher level pairs to zero.
pub fn fourier_coefficients(phi: &SpectralSymbol) -> BTreeMap<PrueferElement, Complex64> {
    let transform = inverse_fourier_fast(phi.as_step_function());
    let p = phi.prime();
    let level = phi.level();
    transform
        .coeffs()
        .iter()
        .enumerate()
        .map(|(t, c)| (PrueferElement::new(p, t as u64, level), *c))
        .collect()
}

/// The frame diagnosis of a real nonnegative symbol.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameReport {
    /// The lower frame bound: the smallest symbol value off the zero set.
    #[serde(rename = "A")]
    pub lower: f64,
    /// The upper frame bound: the largest symbol value.
    #[serde(rename = "B")]
    pub upper: f64,
    /// Haar measure of the zero set of the symbol inside Z_p.
    pub zero_measure: f64,
    pub is_frame: bool,
    pub is_tight: bool,
    pub is_parseval: bool,
    /// The relative tolerance that classified values as zero and bounds as
    /// equal.
    pub tol: f64,
}

/// Reads frame bounds off a symbol's value multiset.  Classes whose value is
/// at most `tol_rel` times the largest value count as the zero set; the
/// bounds are the extremes of the remaining values.  Fails on symbols that
/// are not real nonnegative, and on the zero symbol.
pub fn frame_report(phi: &SpectralSymbol, tol_rel: f64) -> Result<FrameReport> {
    if !(0.0..1.0).contains(&tol_rel) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must lie in [0, 1), got {tol_rel}"
        )));
    }
    let max_abs = phi
        .values()
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    if max_abs == 0.0 {
        return Err(Error::ZeroSymbol);
    }
    if phi.max_imaginary_part() > tol_rel.max(1e-12) * max_abs {
        return Err(Error::InvalidParameter(
            "symbol has non-real values; frame bounds need a self-symbol".into(),
        ));
    }
    let values: Vec<f64> = phi.values().iter().map(|c| c.re).collect();
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    if values.iter().any(|&v| v < -(tol_rel.max(1e-12)) * max) {
        return Err(Error::InvalidParameter(
            "symbol has negative values; frame bounds need a self-symbol".into(),
        ));
    }
    let threshold = tol_rel * max;
    let zero_classes = values.iter().filter(|&&v| v <= threshold).count();
    let lower = values
        .iter()
        .filter(|&&v| v > threshold)
        .cloned()
        .fold(f64::MAX, f64::min);
    let class_measure = 1.0 / phi.class_count() as f64;
    Ok(FrameReport {
        lower,
        upper: max,
        zero_measure: zero_classes as f64 * class_measure,
        is_frame: lower > threshold,
        is_tight: (max - lower) <= tol_rel * max,
        is_parseval: (max - lower) <= tol_rel * max
            && (lower - 1.0).abs() <= tol_rel
            && (max - 1.0).abs() <= tol_rel,
        tol: tol_rel,
    })
}

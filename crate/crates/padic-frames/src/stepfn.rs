//! Step functions on Q_p: finitely supported, locally constant, complex valued.
//!
//! A function at resolution (m, k) is supported in p^{-m} Z_p and constant on
//! cosets of p^k Z_p.  Such a function is determined by p^(m+k) complex
//! numbers: coefficient n is the value on the coset n p^{-m} + p^k Z_p, and
//! n runs over 0 .. p^(m+k).  This indexing identifies the quotient
//! p^{-m} Z_p / p^k Z_p with Z / p^(m+k) exactly, which is what makes the
//! Fourier transform a plain DFT later on.
//!
//! Each coset of p^k Z_p carries Haar measure p^{-k}, so integrals are
//! coefficient sums weighted by p^{-k}.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::padic::{character, pow_i128, PAdicRational};
use crate::pruefer::PrueferElement;

/// A complex step function on Q_p at a fixed resolution.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    ctx: GroupContext,
    support_level: u32,
    constancy_level: u32,
    coeffs: Vec<Complex64>,
}

impl StepFunction {
    /// Wraps a coefficient vector as a step function at resolution (m, k).
    /// The vector length must be exactly p^(m+k).
    pub fn new(
        ctx: GroupContext,
        support_level: u32,
        constancy_level: u32,
        coeffs: Vec<Complex64>,
    ) -> Result<Self> {
        ctx.check_resolution(support_level + constancy_level)?;
        let expected = ctx.grid_size(support_level + constancy_level);
        if coeffs.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "resolution ({support_level}, {constancy_level}) needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(StepFunction {
            ctx,
            support_level,
            constancy_level,
            coeffs,
        })
    }

    /// The zero function at resolution (m, k).
    pub fn zero(ctx: GroupContext, support_level: u32, constancy_level: u32) -> Result<Self> {
        let n = ctx.grid_size(support_level + constancy_level);
        StepFunction::new(
            ctx,
            support_level,
            constancy_level,
            vec![Complex64::new(0.0, 0.0); n],
        )
    }

    /// The modulated ball indicator x -> (x, beta) * 1_{a + p^level Z_p}(x),
    /// built at the minimal resolution that represents it exactly:
    /// support level = exponent of a, constancy level = max(level, exponent
    /// of beta).
    pub fn indicator(
        ctx: GroupContext,
        center: &PAdicRational,
        level: u32,
        modulation: Option<&PAdicRational>,
    ) -> Result<Self> {
        ctx.require_same_prime(center.prime())?;
        let beta = match modulation {
            Some(beta) => {
                ctx.require_same_prime(beta.prime())?;
                *beta
            }
            None => PAdicRational::zero(ctx.prime()),
        };
        let support_level = center.exponent();
        let constancy_level = level.max(beta.exponent());
        ctx.check_resolution(support_level + constancy_level)?;
        let n = ctx.grid_size(support_level + constancy_level);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            let x = point_of_index(ctx.prime(), support_level, idx);
            if in_ball(&x, center, level) {
                *c = character(&x, &beta);
            }
        }
        StepFunction::new(ctx, support_level, constancy_level, coeffs)
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn prime(&self) -> u64 {
        self.ctx.prime()
    }

    /// m: the function is supported in p^{-m} Z_p.
    pub fn support_level(&self) -> u32 {
        self.support_level
    }

    /// k: the function is constant on cosets of p^k Z_p.
    pub fn constancy_level(&self) -> u32 {
        self.constancy_level
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// The point n p^{-m} indexing coefficient n.
    pub fn point_of_index(&self, index: usize) -> PAdicRational {
        point_of_index(self.ctx.prime(), self.support_level, index)
    }

    /// The coefficient index owning the point x, or None when x falls
    /// outside p^{-m} Z_p.
    pub fn index_of_point(&self, x: &PAdicRational) -> Option<usize> {
        index_of_point(
            self.ctx.prime(),
            self.support_level,
            self.constancy_level,
            x,
        )
    }

    /// Evaluates the function at a point of Z[1/p].
    pub fn value_at(&self, x: &PAdicRational) -> Complex64 {
        match self.index_of_point(x) {
            Some(idx) => self.coeffs[idx],
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// Re-expresses the function at a finer resolution (larger support
    /// domain, smaller constancy cosets).  Values are unchanged; the new
    /// coefficients repeat or zero-extend the old ones.
    pub fn refine(&self, support_level: u32, constancy_level: u32) -> Result<Self> {
        if support_level < self.support_level {
            return Err(Error::CoarseningNotSupported {
                from: self.support_level,
                to: support_level,
            });
        }
        if constancy_level < self.constancy_level {
            return Err(Error::CoarseningNotSupported {
                from: self.constancy_level,
                to: constancy_level,
            });
        }
        if support_level == self.support_level && constancy_level == self.constancy_level {
            return Ok(self.clone());
        }
        self.ctx.check_resolution(support_level + constancy_level)?;
        let n = self.ctx.grid_size(support_level + constancy_level);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (idx, c) in coeffs.iter_mut().enumerate() {
            let x = point_of_index(self.ctx.prime(), support_level, idx);
            *c = self.value_at(&x);
        }
        StepFunction::new(self.ctx, support_level, constancy_level, coeffs)
    }

    /// Brings two functions over the same prime to a shared resolution.
    pub fn common_refinement(&self, other: &Self) -> Result<(Self, Self)> {
        self.ctx.require_same_prime(other.prime())?;
        let m = self.support_level.max(other.support_level);
        let k = self.constancy_level.max(other.constancy_level);
        let ctx = if self.ctx.max_level() >= other.ctx.max_level() {
            self.ctx
        } else {
            other.ctx
        };
        let left = self.with_context(ctx)?.refine(m, k)?;
        let right = other.with_context(ctx)?.refine(m, k)?;
        Ok((left, right))
    }

    /// Swaps the governing context (same prime, possibly different cap).
    pub fn with_context(&self, ctx: GroupContext) -> Result<Self> {
        ctx.require_same_prime(self.prime())?;
        StepFunction::new(
            ctx,
            self.support_level,
            self.constancy_level,
            self.coeffs.clone(),
        )
    }

    /// The L2 inner product integral of f times conjugate g.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        let (f, g) = self.common_refinement(other)?;
        let weight = coset_measure(f.prime(), f.constancy_level);
        let sum: Complex64 = f
            .coeffs
            .iter()
            .zip(g.coeffs.iter())
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(sum * weight)
    }

    /// The squared L2 norm.
    pub fn norm_sq(&self) -> f64 {
        let weight = coset_measure(self.prime(), self.constancy_level);
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>() * weight
    }

    /// The Haar integral of the function over all of Q_p.
    pub fn integral(&self) -> Complex64 {
        let weight = coset_measure(self.prime(), self.constancy_level);
        self.coeffs.iter().sum::<Complex64>() * weight
    }

    /// Pointwise sum at the common refinement.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let (mut f, g) = self.common_refinement(other)?;
        for (a, b) in f.coeffs.iter_mut().zip(g.coeffs.iter()) {
            *a += b;
        }
        Ok(f)
    }

    /// Pointwise difference at the common refinement.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= factor;
        }
        out
    }

    /// Largest pointwise deviation from another function, measured at the
    /// common refinement.
    pub fn sup_distance(&self, other: &Self) -> Result<f64> {
        let (f, g) = self.common_refinement(other)?;
        Ok(f.coeffs
            .iter()
            .zip(g.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Periodization over the subgroup Z_p: for each coset [x] in G / H
    /// meeting the support domain, the integral of f over that coset.
    /// Summing the map recovers the total integral of f.
    pub fn weil_periodize(&self) -> BTreeMap<PrueferElement, Complex64> {
        let p = self.prime();
        let m = self.support_level;
        let classes = self.ctx.grid_size(m);
        let per_class = self.ctx.grid_size(self.constancy_level);
        let weight = coset_measure(p, self.constancy_level);
        let mut out = BTreeMap::new();
        for r in 0..classes {
            let total: Complex64 = (0..per_class).map(|j| self.coeffs[r + j * classes]).sum();
            out.insert(PrueferElement::new(p, r as u64, m), total * weight);
        }
        out
    }

    /// Shrinks the representation to the minimal resolution that still holds
    /// the function exactly (the inverse of `refine` where possible).
    /// Comparison is exact, so this only removes structurally redundant
    /// resolution, never rounds.
    pub fn compact(&self) -> Self {
        let mut current = self.clone();
        // Drop outer shells of the support domain that are identically zero.
        while current.support_level > 0 {
            let p = current.prime() as usize;
            let shrinkable = current
                .coeffs
                .iter()
                .enumerate()
                .all(|(n, c)| n % p == 0 || (c.re == 0.0 && c.im == 0.0));
            if !shrinkable {
                break;
            }
            current = current.subsample(current.support_level - 1, current.constancy_level);
        }
        // Merge constancy cosets that carry identical values.
        while current.constancy_level > 0 {
            let coarse = current.ctx.grid_size(
                current.support_level + current.constancy_level - 1,
            );
            let mergeable = current
                .coeffs
                .iter()
                .enumerate()
                .all(|(n, c)| *c == current.coeffs[n % coarse]);
            if !mergeable {
                break;
            }
            current = current.subsample(current.support_level, current.constancy_level - 1);
        }
        current
    }

    /// Re-reads the function at a coarser resolution by sampling.  Only
    /// sound when the caller has checked the coarse grid still separates the
    /// function's values, hence private.
    fn subsample(&self, support_level: u32, constancy_level: u32) -> Self {
        let n = self.ctx.grid_size(support_level + constancy_level);
        let coeffs = (0..n)
            .map(|idx| self.value_at(&point_of_index(self.ctx.prime(), support_level, idx)))
            .collect();
        StepFunction {
            ctx: self.ctx,
            support_level,
            constancy_level,
            coeffs,
        }
    }

    /// Serializes to the interchange schema (p, levels, split re/im arrays).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("step function serialization cannot fail")
    }

    /// Parses the interchange schema, validating the prime and the
    /// coefficient count.
    pub fn from_json(text: &str) -> Result<Self> {
        let repr: StepFunctionRepr =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        repr.build()
    }
}

/// The Haar measure p^{-k} of one constancy coset.
pub(crate) fn coset_measure(p: u64, constancy_level: u32) -> f64 {
    1.0 / pow_i128(p, constancy_level) as f64
}

pub(crate) fn point_of_index(p: u64, support_level: u32, index: usize) -> PAdicRational {
    PAdicRational::new(p, index as i64, support_level)
}

pub(crate) fn index_of_point(
    p: u64,
    support_level: u32,
    constancy_level: u32,
    x: &PAdicRational,
) -> Option<usize> {
    if x.exponent() > support_level {
        return None;
    }
    let modulus = pow_i128(p, support_level + constancy_level);
    let scaled = x.numerator() as i128 * pow_i128(p, support_level - x.exponent());
    Some(scaled.rem_euclid(modulus) as usize)
}

fn in_ball(x: &PAdicRational, center: &PAdicRational, level: u32) -> bool {
    let d = *x - *center;
    match d.valuation() {
        Err(_) => true, // d = 0: x is the center
        Ok(v) => v >= level as i64,
    }
}

#[derive(Serialize, Deserialize)]
struct StepFunctionRepr {
    p: u64,
    support_level: u32,
    constancy_level: u32,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl StepFunctionRepr {
    fn build(self) -> Result<StepFunction> {
        if self.re.len() != self.im.len() {
            return Err(Error::Parse(format!(
                "re has {} entries but im has {}",
                self.re.len(),
                self.im.len()
            )));
        }
        let base = GroupContext::with_default_level(self.p)?;
        let total = self.support_level + self.constancy_level;
        let ctx = if total > base.max_level() {
            GroupContext::new(self.p, total)?
        } else {
            base
        };
        let coeffs = self
            .re
            .iter()
            .zip(self.im.iter())
            .map(|(&re, &im)| Complex64::new(re, im))
            .collect();
        StepFunction::new(ctx, self.support_level, self.constancy_level, coeffs)
    }
}

impl Serialize for StepFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StepFunctionRepr {
            p: self.prime(),
            support_level: self.support_level,
            constancy_level: self.constancy_level,
            re: self.coeffs.iter().map(|c| c.re).collect(),
            im: self.coeffs.iter().map(|c| c.im).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StepFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = StepFunctionRepr::deserialize(deserializer)?;
        repr.build().map_err(D::Error::custom)
    }
}

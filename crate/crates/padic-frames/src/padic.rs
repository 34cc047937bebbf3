//! Exact arithmetic in Z[1/p]: the rationals whose denominator is a power of p.
//!
//! Every point this crate ever evaluates a character at lies in the dense
//! subgroup Z[1/p] of Q_p, so all group-side arithmetic is exact integer
//! arithmetic.  Floating point enters exactly once, at the final complex
//! exponential, after the phase exponent has been reduced modulo p^e as an
//! exact integer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// An element num / p^exp of Z[1/p], kept in reduced form: either exp = 0 or
/// p does not divide num.  The prime travels with the value so that mixing
/// incompatible groups is detectable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicRational {
    p: u64,
    num: i64,
    exp: u32,
}

impl PAdicRational {
    /// Builds num / p^exp and reduces it.  `p` must be at least 2; primality
    /// is the caller's concern (contexts validate it once).
    pub fn new(p: u64, num: i64, exp: u32) -> Self {
        assert!(p >= 2, "p must be at least 2");
        let (num, exp) = reduce(p as i128, num as i128, exp);
        PAdicRational { p, num, exp }
    }

    pub fn zero(p: u64) -> Self {
        PAdicRational::new(p, 0, 0)
    }

    pub fn one(p: u64) -> Self {
        PAdicRational::new(p, 1, 0)
    }

    pub fn from_integer(p: u64, n: i64) -> Self {
        PAdicRational::new(p, n, 0)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    /// The exponent e in the reduced representation num / p^e.
    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True when the value lies in Z_p, i.e. has nonnegative valuation.
    pub fn is_integral(&self) -> bool {
        self.exp == 0
    }

    /// The p-adic valuation v_p.  Zero has no finite valuation.
    pub fn valuation(&self) -> Result<i64> {
        if self.num == 0 {
            return Err(Error::ZeroValuation);
        }
        if self.exp > 0 {
            // Reduced form: p does not divide num here.
            return Ok(-(self.exp as i64));
        }
        let p = self.p as i128;
        let mut n = (self.num as i128).abs();
        let mut v = 0i64;
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        Ok(v)
    }

    /// The p-adic fractional part {x}_p in [0, 1): the canonical coset
    /// representative of x modulo Z_p.  Satisfies x - {x}_p in Z_p.
    pub fn fractional_part(&self) -> Self {
        if self.exp == 0 {
            return PAdicRational::zero(self.p);
        }
        let modulus = pow_i128(self.p, self.exp);
        let r = (self.num as i128).rem_euclid(modulus);
        PAdicRational::new(self.p, i128_to_i64(r), self.exp)
    }

    /// x - {x}_p: the Z_p part of x.  Always integral.
    pub fn integral_part(&self) -> Self {
        *self - self.fractional_part()
    }

    /// The value as a real number.  Exact for every value this crate builds
    /// (numerators and p^exp stay far below 2^53).
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / pow_i128(self.p, self.exp) as f64
    }
}

/// The standard character pairing (x, gamma) = exp(2 pi i {x gamma}_p) that
/// identifies Q_p with its own dual.  The phase exponent {x gamma}_p is
/// reduced exactly before any floating-point operation, so the result is a
/// unit-modulus complex number accurate to a few ulps.
pub fn character(x: &PAdicRational, gamma: &PAdicRational) -> Complex64 {
    let frac = (*x * *gamma).fractional_part();
    unit_phase(&frac)
}

/// exp(2 pi i t) for t = num / p^e in [0, 1).
pub(crate) fn unit_phase(t: &PAdicRational) -> Complex64 {
    debug_assert!(t.num >= 0 && (t.num as i128) < pow_i128(t.p, t.exp));
    if t.num == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let ratio = t.num as f64 / pow_i128(t.p, t.exp) as f64;
    Complex64::cis(std::f64::consts::TAU * ratio)
}

fn reduce(p: i128, mut num: i128, mut exp: u32) -> (i64, u32) {
    if num == 0 {
        return (0, 0);
    }
    while exp > 0 && num % p == 0 {
        num /= p;
        exp -= 1;
    }
    (i128_to_i64(num), exp)
}

pub(crate) fn pow_i128(p: u64, exp: u32) -> i128 {
    (p as i128)
        .checked_pow(exp)
        .expect("power of p overflows the supported range")
}

fn i128_to_i64(n: i128) -> i64 {
    i64::try_from(n).expect("numerator overflows the supported range")
}

fn require_same_prime(a: &PAdicRational, b: &PAdicRational) {
    assert_eq!(
        a.p, b.p,
        "cannot combine values over different primes ({} vs {})",
        a.p, b.p
    );
}

impl Add for PAdicRational {
    type Output = PAdicRational;

    fn add(self, rhs: PAdicRational) -> PAdicRational {
        require_same_prime(&self, &rhs);
        let p = self.p as i128;
        let exp = self.exp.max(rhs.exp);
        let a = self.num as i128 * pow_i128(self.p, exp - self.exp);
        let b = rhs.num as i128 * pow_i128(self.p, exp - rhs.exp);
        let (num, exp) = reduce(p, a + b, exp);
        PAdicRational {
            p: self.p,
            num,
            exp,
        }
    }
}

impl Sub for PAdicRational {
    type Output = PAdicRational;

    fn sub(self, rhs: PAdicRational) -> PAdicRational {
        self + (-rhs)
    }
}

impl Neg for PAdicRational {
    type Output = PAdicRational;

    fn neg(self) -> PAdicRational {
        PAdicRational {
            p: self.p,
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Mul for PAdicRational {
    type Output = PAdicRational;

    fn mul(self, rhs: PAdicRational) -> PAdicRational {
        require_same_prime(&self, &rhs);
        let p = self.p as i128;
        let prod = self.num as i128 * rhs.num as i128;
        let (num, exp) = reduce(p, prod, self.exp + rhs.exp);
        PAdicRational {
            p: self.p,
            num,
            exp,
        }
    }
}

impl PartialOrd for PAdicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PAdicRational {
    /// Deterministic structural order (prime, exponent, numerator); used for
    /// map keys, not for any analytic comparison.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.exp, self.num).cmp(&(other.p, other.exp, other.num))
    }
}

impl fmt::Display for PAdicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/p^{}", self.num, self.exp)
        }
    }
}

/// Parses the textual form produced by `Display`: either an integer "n" or a
/// fraction "n/p^e" with a literal p.
pub fn parse_rational(p: u64, text: &str) -> Result<PAdicRational> {
    let text = text.trim();
    let (num_part, exp) = match text.split_once('/') {
        None => (text, 0u32),
        Some((num, denom)) => {
            let denom = denom.trim();
            let exp_text = denom
                .strip_prefix("p^")
                .ok_or_else(|| Error::Parse(format!("expected denominator p^e, got {denom:?}")))?;
            let exp: u32 = exp_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {exp_text:?}")))?;
            (num, exp)
        }
    };
    let num: i64 = num_part
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {num_part:?}")))?;
    Ok(PAdicRational::new(p, num, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: u64, num: i64, exp: u32) -> PAdicRational {
        PAdicRational::new(p, num, exp)
    }

    #[test]
    fn construction_reduces() {
        let x = q(2, 4, 3); // 4/8 = 1/2
        assert_eq!((x.numerator(), x.exponent()), (1, 1));
        let y = q(3, 18, 1); // 18/3 = 6
        assert_eq!((y.numerator(), y.exponent()), (6, 0));
        assert_eq!(q(5, 0, 4), PAdicRational::zero(5));
    }

    #[test]
    fn valuation_counts_powers_of_p() {
        assert_eq!(q(2, 12, 0).valuation().unwrap(), 2);
        assert_eq!(q(3, 5, 0).valuation().unwrap(), 0);
        assert_eq!(q(2, 1, 3).valuation().unwrap(), -3);
        assert_eq!(q(7, -49, 0).valuation().unwrap(), 2);
    }

    #[test]
    fn valuation_of_zero_is_an_error() {
        let err = PAdicRational::zero(2).valuation().unwrap_err();
        assert_eq!(err.to_string(), "valuation of zero undefined");
    }

    #[test]
    fn fractional_part_lands_in_unit_interval() {
        // {5/4}_2 = 1/4 because 5/4 = 1 + 1/4.
        assert_eq!(q(2, 5, 2).fractional_part(), q(2, 1, 2));
        // {-1/3}_3 = 2/3 because -1/3 = -1 + 2/3.
        assert_eq!(q(3, -1, 1).fractional_part(), q(3, 2, 1));
        // Integers have no fractional part.
        assert_eq!(q(5, 17, 0).fractional_part(), PAdicRational::zero(5));
        // x - {x}_p is always integral.
        let x = q(3, -22, 4);
        assert!((x - x.fractional_part()).is_integral());
    }

    #[test]
    fn arithmetic_matches_rational_arithmetic() {
        // 1/2 + 1/2 = 1, exactly, with the power of p cancelled.
        let half = q(2, 1, 1);
        assert_eq!(half + half, PAdicRational::one(2));
        // 1/3 * 3 = 1.
        assert_eq!(q(3, 1, 1) * q(3, 3, 0), PAdicRational::one(3));
        // 5/9 - 2/3 = -1/9.
        assert_eq!(q(3, 5, 2) - q(3, 2, 1), q(3, -1, 2));
    }

    #[test]
    #[should_panic(expected = "different primes")]
    fn mixing_primes_panics() {
        let _ = q(2, 1, 1) + q(3, 1, 1);
    }

    #[test]
    fn character_basic_values() {
        // (1/2, 1) = exp(2 pi i * 1/2) = -1 for p = 2.
        let v = character(&q(2, 1, 1), &PAdicRational::one(2));
        assert!((v - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        // Integral products pair trivially.
        let v = character(&q(3, 9, 1), &q(3, 5, 0));
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        // (1/9, 2) = exp(4 pi i / 9) for p = 3.
        let v = character(&q(3, 1, 2), &q(3, 2, 0));
        let expected = Complex64::cis(std::f64::consts::TAU * 2.0 / 9.0);
        assert!((v - expected).norm() < 1e-15);
    }

    #[test]
    fn character_has_unit_modulus() {
        let xs = [q(2, 3, 4), q(2, -7, 2), q(2, 1, 0), q(2, -5, 6)];
        for x in &xs {
            for g in &xs {
                assert!((character(x, g).norm() - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn character_is_multiplicative_in_each_slot() {
        let x = q(5, 3, 2);
        let a = q(5, 7, 1);
        let b = q(5, -2, 3);
        let lhs = character(&x, &(a + b));
        let rhs = character(&x, &a) * character(&x, &b);
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for x in [q(2, 5, 3), q(2, -3, 1), q(2, 7, 0), PAdicRational::zero(2)] {
            let text = x.to_string();
            assert_eq!(parse_rational(2, &text).unwrap(), x);
        }
        assert_eq!(parse_rational(3, "4/p^2").unwrap(), q(3, 4, 2));
        assert!(parse_rational(3, "4/9").is_err());
        assert!(parse_rational(3, "x/p^2").is_err());
    }
}

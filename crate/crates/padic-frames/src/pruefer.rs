//! The discrete quotient Q_p / Z_p, a Pruefer p-group.
//!
//! Cosets of Z_p index the translates this crate studies.  Each coset has a
//! unique representative r / p^l with 0 <= r < p^l and p not dividing r
//! (or r = l = 0), which is exactly the p-adic fractional part of any of its
//! members.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{pow_i128, PAdicRational};

/// A coset [x] in Q_p / Z_p, stored as its canonical representative
/// residue / p^level in reduced form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrueferElement {
    p: u64,
    level: u32,
    residue: u64,
}

impl PrueferElement {
    /// Builds the class of residue / p^level, reducing modulo 1 and
    /// cancelling common powers of p.
    pub fn new(p: u64, residue: u64, level: u32) -> Self {
        assert!(p >= 2, "p must be at least 2");
        let modulus = pow_i128(p, level) as u64;
        let mut residue = residue % modulus;
        let mut level = level;
        while level > 0 && residue % p == 0 {
            residue /= p;
            level -= 1;
        }
        if level == 0 {
            residue = 0;
        }
        PrueferElement { p, level, residue }
    }

    pub fn zero(p: u64) -> Self {
        PrueferElement {
            p,
            level: 0,
            residue: 0,
        }
    }

    /// The class of an arbitrary element of Z[1/p] modulo Z_p.
    pub fn from_rational(x: &PAdicRational) -> Self {
        let frac = x.fractional_part();
        PrueferElement::new(frac.prime(), frac.numerator() as u64, frac.exponent())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The least l with p^l * [x] = 0; the canonical representative is
    /// residue / p^level.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.level == 0
    }

    /// The order of the class as a group element: p^level.
    pub fn order(&self) -> u64 {
        pow_i128(self.p, self.level) as u64
    }

    /// The canonical representative residue / p^level as a point of Z[1/p].
    pub fn representative(&self) -> PAdicRational {
        PAdicRational::new(self.p, self.residue as i64, self.level)
    }

    /// The inverse class [-x].
    pub fn negated(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        let modulus = self.order();
        PrueferElement::new(self.p, modulus - self.residue, self.level)
    }
}

/// Addition in Q_p / Z_p (addition of representatives modulo 1).
pub fn pruefer_add(a: &PrueferElement, b: &PrueferElement) -> Result<PrueferElement> {
    if a.p != b.p {
        return Err(Error::PrimeMismatch {
            left: a.p,
            right: b.p,
        });
    }
    let level = a.level.max(b.level);
    let modulus = pow_i128(a.p, level);
    let ra = a.residue as i128 * pow_i128(a.p, level - a.level);
    let rb = b.residue as i128 * pow_i128(a.p, level - b.level);
    let sum = (ra + rb).rem_euclid(modulus) as u64;
    Ok(PrueferElement::new(a.p, sum, level))
}

/// Difference a - b in Q_p / Z_p.
pub fn pruefer_sub(a: &PrueferElement, b: &PrueferElement) -> Result<PrueferElement> {
    pruefer_add(a, &b.negated())
}

/// All classes of level at most `level`, in index order: the class of
/// t / p^level for t = 0, 1, ..., p^level - 1.
pub fn classes_up_to_level(p: u64, level: u32) -> Vec<PrueferElement> {
    let n = pow_i128(p, level) as u64;
    (0..n).map(|t| PrueferElement::new(p, t, level)).collect()
}

impl PartialOrd for PrueferElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrueferElement {
    /// Orders by (prime, level, residue): a deterministic enumeration order
    /// that lists coarse classes before fine ones.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.level, self.residue).cmp(&(other.p, other.level, other.residue))
    }
}

impl fmt::Display for PrueferElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

//! The ambient group pair: G = Q_p with compact open subgroup H = Z_p.
//!
//! Haar measure is normalized so that mu(Z_p) = 1 on the group side and
//! nu(Z_p) = 1 on the dual side (the dual of Q_p is again Q_p, and the
//! annihilator of Z_p is Z_p itself).  Quotients G/H and its dual analogue
//! carry counting measure.  Every finite computation in this crate lives on
//! grids of the form p^{-m} Z_p / p^k Z_p, and a [`GroupContext`] records the
//! prime together with the finest grid the session is willing to touch.

use crate::error::{Error, Result};

/// Largest value of p^max_level a context will accept.  Keeps every grid
/// index comfortably inside i64/usize and memory use sane.
const INDEX_CAP: u64 = 1 << 22;

/// Default resolution budget: the largest level L with p^L <= 4096.
/// For p = 2 this gives 12; for p = 3 it gives 7.
const DEFAULT_SIZE_BUDGET: u64 = 4096;

/// The prime p together with a resolution cap for grid computations.
///
/// `max_level` bounds m + k for every step function built in this context:
/// supports never grow beyond p^{-max_level} Z_p and constancy cosets never
/// shrink below p^{max_level} Z_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupContext {
    p: u64,
    max_level: u32,
}

impl GroupContext {
    /// Builds a context for the prime `p` with an explicit resolution cap.
    ///
    /// Fails if `p` is not prime, `max_level` is zero, or p^max_level would
    /// overflow the supported index range.
    pub fn new(p: u64, max_level: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
        }
        if max_level == 0 {
            return Err(Error::InvalidParameter(
                "max_level must be at least 1".into(),
            ));
        }
        match checked_pow(p, max_level) {
            Some(n) if n <= INDEX_CAP => Ok(GroupContext { p, max_level }),
            _ => Err(Error::InvalidParameter(format!(
                "p^max_level = {p}^{max_level} exceeds the supported index range"
            ))),
        }
    }

    /// Builds a context with the default resolution cap for `p`: the largest
    /// level L with p^L <= 4096 (so 12 for p = 2, 7 for p = 3, 5 for p = 5).
    pub fn with_default_level(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
        }
        let mut level = 1u32;
        while checked_pow(p, level + 1).is_some_and(|n| n <= DEFAULT_SIZE_BUDGET) {
            level += 1;
        }
        GroupContext::new(p, level)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// p^level as a grid size.  Panics if `level` exceeds the cap, which is a
    /// programming error: resolution checks happen before sizes are computed.
    pub fn grid_size(&self, level: u32) -> usize {
        assert!(
            level <= self.max_level,
            "level {level} exceeds context cap {}",
            self.max_level
        );
        checked_pow(self.p, level).expect("cap keeps powers in range") as usize
    }

    /// Checks that a proposed resolution m + k fits under the cap.
    pub fn check_resolution(&self, total_level: u32) -> Result<()> {
        if total_level > self.max_level {
            Err(Error::ResolutionOverflow {
                required: total_level,
                max_level: self.max_level,
            })
        } else {
            Ok(())
        }
    }

    /// Fails with a prime-mismatch error unless `other` shares this prime.
    pub fn require_same_prime(&self, other_p: u64) -> Result<()> {
        if self.p == other_p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch {
                left: self.p,
                right: other_p,
            })
        }
    }
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_primes_and_rejects_composites() {
        assert!(GroupContext::new(2, 12).is_ok());
        assert!(GroupContext::new(3, 7).is_ok());
        assert!(GroupContext::new(97, 1).is_ok());
        assert!(GroupContext::new(1, 3).is_err());
        assert!(GroupContext::new(4, 3).is_err());
        assert!(GroupContext::new(91, 2).is_err()); // 7 * 13
    }

    #[test]
    fn default_levels_follow_the_size_budget() {
        assert_eq!(GroupContext::with_default_level(2).unwrap().max_level(), 12);
        assert_eq!(GroupContext::with_default_level(3).unwrap().max_level(), 7);
        assert_eq!(GroupContext::with_default_level(5).unwrap().max_level(), 5);
        assert_eq!(GroupContext::with_default_level(7).unwrap().max_level(), 4);
        assert_eq!(GroupContext::with_default_level(4099).unwrap().max_level(), 1);
    }

    #[test]
    fn resolution_cap_is_enforced() {
        let ctx = GroupContext::new(2, 5).unwrap();
        assert!(ctx.check_resolution(5).is_ok());
        let err = ctx.check_resolution(6).unwrap_err();
        assert!(matches!(
            err,
            Error::ResolutionOverflow {
                required: 6,
                max_level: 5
            }
        ));
    }

    #[test]
    fn grid_sizes_are_exact_powers() {
        let ctx = GroupContext::new(3, 7).unwrap();
        assert_eq!(ctx.grid_size(0), 1);
        assert_eq!(ctx.grid_size(4), 81);
    }

    #[test]
    fn level_zero_is_rejected() {
        assert!(GroupContext::new(5, 0).is_err());
    }
}

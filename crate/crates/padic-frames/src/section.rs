//! Sections of the quotient map from the dual group onto dual-mod-annihilator.
//!
//! A section picks one representative from each coset of Z_p inside Q_p on
//! the frequency side.  The canonical section takes the p-adic fractional
//! part, whose image is Z[1/p] intersected with [0, 1).  Any other section
//! differs from it by a Z_p-valued offset per coset; since every offset this
//! crate can represent lies in Z[1/p] as well, offsets are plain integers.
//! Translation operators and spectral symbols depend on this choice, which is
//! why it is threaded explicitly through the whole API.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::padic::PAdicRational;

/// A choice of coset representatives on the frequency side: the canonical
/// fractional-part section, optionally perturbed by integral offsets on
/// finitely many cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    ctx: GroupContext,
    offsets: BTreeMap<PAdicRational, PAdicRational>,
}

impl Section {
    /// The canonical section: every coset is represented by the p-adic
    /// fractional part of its members.
    pub fn canonical(ctx: GroupContext) -> Self {
        Section {
            ctx,
            offsets: BTreeMap::new(),
        }
    }

    /// A section that replaces the canonical representative sigma by
    /// sigma + delta on each listed coset.  Keys must be canonical
    /// representatives (fixed by the fractional part, level within the
    /// context cap) and offsets must be integral.
    pub fn with_offsets(
        ctx: GroupContext,
        offsets: BTreeMap<PAdicRational, PAdicRational>,
    ) -> Result<Self> {
        for (sigma, delta) in &offsets {
            ctx.require_same_prime(sigma.prime())?;
            ctx.require_same_prime(delta.prime())?;
            if sigma.fractional_part() != *sigma {
                return Err(Error::InvalidParameter(format!(
                    "offset key {sigma} is not a canonical representative"
                )));
            }
            if sigma.exponent() > ctx.max_level() {
                return Err(Error::InvalidParameter(format!(
                    "offset key {sigma} is finer than the context cap {}",
                    ctx.max_level()
                )));
            }
            if !delta.is_integral() {
                return Err(Error::InvalidParameter(format!(
                    "offset {delta} for key {sigma} is not integral"
                )));
            }
        }
        Ok(Section { ctx, offsets })
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn is_canonical(&self) -> bool {
        self.offsets.values().all(|d| d.is_zero())
    }

    pub fn offsets(&self) -> &BTreeMap<PAdicRational, PAdicRational> {
        &self.offsets
    }

    /// The representative this section assigns to the coset of `gamma`.
    pub fn representative(&self, gamma: &PAdicRational) -> PAdicRational {
        let canonical = gamma.fractional_part();
        match self.offsets.get(&canonical) {
            Some(delta) => canonical + *delta,
            None => canonical,
        }
    }

    /// Splits gamma = sigma + eta with sigma the section representative of
    /// gamma's coset and eta in Z_p.
    pub fn decompose(&self, gamma: &PAdicRational) -> (PAdicRational, PAdicRational) {
        assert_eq!(
            gamma.prime(),
            self.ctx.prime(),
            "gamma lives over a different prime than the section"
        );
        let sigma = self.representative(gamma);
        let eta = *gamma - sigma;
        debug_assert!(eta.is_integral());
        (sigma, eta)
    }
}

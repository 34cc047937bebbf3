//! Seeded random inputs for the verification layer.
//!
//! The generators are deliberately plain — uniform coefficients, uniform
//! class subsets, small integral section offsets — so a reported seed plus
//! the parameters reconstructs the exact inputs of any failed check.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::seq::index::sample;
use rand::Rng;

use crate::error::Result;
use crate::group::GroupContext;
use crate::oracle::TrigPolynomial;
use crate::padic::PAdicRational;
use crate::pruefer::classes_up_to_level;
use crate::section::Section;
use crate::stepfn::StepFunction;

/// Upper bound on the number of terms a random polynomial carries.
const MAX_TERMS: usize = 6;

fn random_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// A step function with uniform coefficients in the unit square, at the
/// given resolution.
pub fn random_step_function(
    ctx: GroupContext,
    support_level: u32,
    constancy_level: u32,
    rng: &mut impl Rng,
) -> Result<StepFunction> {
    ctx.check_resolution(support_level + constancy_level)?;
    let n = ctx.grid_size(support_level + constancy_level);
    let coeffs = (0..n).map(|_| random_complex(rng)).collect();
    StepFunction::new(ctx, support_level, constancy_level, coeffs)
}

/// A coefficient polynomial supported on a random subset of the classes of
/// level at most `max_level`, with uniform complex coefficients.
pub fn random_trig_polynomial(
    ctx: GroupContext,
    max_level: u32,
    rng: &mut impl Rng,
) -> Result<TrigPolynomial> {
    ctx.check_resolution(max_level)?;
    let classes = classes_up_to_level(ctx.prime(), max_level);
    let terms = rng.gen_range(1..=MAX_TERMS.min(classes.len()));
    let coeffs: BTreeMap<_, _> = sample(rng, classes.len(), terms)
        .into_iter()
        .map(|idx| (classes[idx], random_complex(rng)))
        .collect();
    TrigPolynomial::new(ctx, coeffs)
}

/// A section with independent coin-flip offsets: each canonical class
/// representative of level at most `key_level` receives a nonzero integral
/// offset in [-3, 3] with probability one half.
pub fn random_section(
    ctx: GroupContext,
    key_level: u32,
    rng: &mut impl Rng,
) -> Result<Section> {
    ctx.check_resolution(key_level)?;
    let mut offsets = BTreeMap::new();
    for class in classes_up_to_level(ctx.prime(), key_level) {
        if !rng.gen_bool(0.5) {
            continue;
        }
        let delta = loop {
            let d = rng.gen_range(-3i64..=3);
            if d != 0 {
                break d;
            }
        };
        offsets.insert(
            class.representative(),
            PAdicRational::from_integer(ctx.prime(), delta),
        );
    }
    Section::with_offsets(ctx, offsets)
}

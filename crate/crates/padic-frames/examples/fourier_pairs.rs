//! Fourier transforms: exact DFT, Plancherel, and the fast path.
//!
//! The transform of a step function at resolution (m, k) is a step function
//! at resolution (k, m): support and constancy swap roles.  `fourier` is the
//! quadratic-time reference sum; `fourier_fast` reaches the same numbers
//! through a radix-p decimation and is what the rest of the crate calls.

use padic_frames::fourier::{fourier, fourier_fast, inverse_fourier_fast};
use padic_frames::{GroupContext, PAdicRational, StepFunction};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> padic_frames::Result<()> {
    let p = 3;
    let ctx = GroupContext::with_default_level(p)?;

    // The unit ball is its own transform.
    let ball = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?;
    let ball_hat = fourier(&ball);
    println!(
        "1_Zp transforms to resolution ({}, {}), sup distance to itself {:.1e}",
        ball_hat.support_level(),
        ball_hat.constancy_level(),
        ball_hat.sup_distance(&ball)?
    );

    // A wider ball transforms to a taller, narrower one: the indicator of
    // p^{-2} Z_p becomes p^2 * 1_{p^2 Z_p}.
    let wide = StepFunction::new(ctx, 2, 0, vec![1.0.into(); 9])?;
    let wide_hat = fourier(&wide);
    println!(
        "1_(p^-2 Zp) transforms to ({}, {}); value at 0 = {:.1}, at 1 = {:.1}",
        wide_hat.support_level(),
        wide_hat.constancy_level(),
        wide_hat.value_at(&PAdicRational::zero(p)).re,
        wide_hat.value_at(&PAdicRational::from_integer(p, 1)).re
    );

    // Plancherel and inversion on a random function, fast vs reference.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let f = padic_frames::sampling::random_step_function(ctx, 2, 3, &mut rng)?;
    let slow = fourier(&f);
    let fast = fourier_fast(&f);
    println!(
        "random (2, 3) function: |f|^2 = {:.9}, |f^|^2 = {:.9}",
        f.norm_sq(),
        fast.norm_sq()
    );
    println!(
        "  fast vs reference sup distance = {:.2e}",
        fast.sup_distance(&slow)?
    );
    let back = inverse_fourier_fast(&fast);
    println!(
        "  inversion round trip sup distance = {:.2e}",
        back.sup_distance(&f)?
    );

    // The transform turns pointwise shift into modulation: shifting by an
    // integer multiplies the transform by a character, so norms agree.
    let shifted = padic_frames::translates::pointwise_shift(&f, &PAdicRational::from_integer(p, 1))?;
    println!(
        "shift by 1 preserves the spectrum's magnitude: |f^|^2 - |shift^|^2 = {:.2e}",
        fourier_fast(&shifted).norm_sq() - fast.norm_sq()
    );

    Ok(())
}

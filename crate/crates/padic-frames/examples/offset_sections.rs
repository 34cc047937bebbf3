//! How the choice of section enters — where it cancels, and where it doesn't.
//!
//! A section picks one representative per frequency coset, and both the
//! translation operators and the spectral symbol depend on it.  When the
//! generator's spectrum meets a single coset, moving representatives only
//! translates the symbol, so the frame bounds survive; when the spectrum
//! straddles several cosets, different sections yield genuinely different
//! systems with different bounds.  Either way the symbol route and the Gram
//! route agree with each other, section by section.

use std::collections::BTreeMap;

use padic_frames::fourier::inverse_fourier_fast;
use padic_frames::oracle::{gram_matrix, hermitian_eigenvalues};
use padic_frames::spectral::{frame_report, spectral_symbol};
use padic_frames::translates::{translate, w_symbol};
use padic_frames::{GroupContext, PAdicRational, PrueferElement, Section, StepFunction};

fn offset_section(ctx: GroupContext, key: PAdicRational, delta: i64) -> padic_frames::Result<Section> {
    let mut offsets = BTreeMap::new();
    offsets.insert(key, PAdicRational::from_integer(ctx.prime(), delta));
    Section::with_offsets(ctx, offsets)
}

fn main() -> padic_frames::Result<()> {
    let p = 2;
    let ctx = GroupContext::with_default_level(p)?;
    let canonical = Section::canonical(ctx);

    // --- The weight itself moves. ---------------------------------------
    // Replacing the representative 1/2 by 1/2 + 3 changes the frequency
    // decomposition gamma = sigma + eta, hence the translation weight.
    let moved_half = offset_section(ctx, PAdicRational::new(p, 1, 1), 3)?;
    let b = PrueferElement::new(p, 1, 2);
    let gamma = PAdicRational::new(p, 3, 1);
    let w_can = w_symbol(&b, &canonical, &gamma);
    let w_off = w_symbol(&b, &moved_half, &gamma);
    println!(
        "weight of tau_{b} at gamma = {gamma}: canonical {:+.4} {:+.4}i, offset {:+.4} {:+.4}i",
        w_can.re, w_can.im, w_off.re, w_off.im
    );

    // --- Spectrum inside one coset: bounds survive. ----------------------
    // f = 1_Zp + 1_(1/4 + Zp) has its spectrum inside Z_p, so an offset on
    // the class of 0 only translates the symbol: same values, new classes.
    let f = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?
        .add(&StepFunction::indicator(ctx, &PAdicRational::new(p, 1, 2), 0, None)?)?;
    let shifted_zero = offset_section(ctx, PAdicRational::zero(p), 1)?;
    let t_can = translate(&f, &b, &canonical)?;
    let t_off = translate(&f, &b, &shifted_zero)?;
    println!(
        "\nspectrum inside Z_p: translates differ pointwise (sup distance {:.4})",
        t_can.sup_distance(&t_off)?
    );
    let phi_can = spectral_symbol(&f, &canonical)?;
    let phi_off = spectral_symbol(&f, &shifted_zero)?;
    println!("symbol values, canonical vs offset (translated, same multiset):");
    for (a, b) in phi_can
        .real_values_at_level(2)?
        .iter()
        .zip(phi_off.real_values_at_level(2)?)
    {
        println!("  {a:.6}  |  {b:.6}");
    }
    let r_can = frame_report(&phi_can, 1e-9)?;
    let r_off = frame_report(&phi_off, 1e-9)?;
    println!(
        "bounds agree: A = {:.6} | {:.6}, B = {:.6} | {:.6}, zero measure = {} | {}",
        r_can.lower, r_off.lower, r_can.upper, r_off.upper, r_can.zero_measure, r_off.zero_measure
    );

    // --- Spectrum straddling two cosets: bounds genuinely change. --------
    // Design the spectrum directly: g^ = 2 * 1_(4 Zp) + 1_(3/2 + 4 Zp)
    // puts mass on the cosets of 0 and of 1/2, with different profiles.
    let spectrum = StepFunction::indicator(ctx, &PAdicRational::zero(p), 2, None)?
        .scale(2.0.into())
        .add(&StepFunction::indicator(ctx, &PAdicRational::new(p, 3, 1), 2, None)?)?;
    let g = inverse_fourier_fast(&spectrum);
    let phi_can = spectral_symbol(&g, &canonical)?;
    let phi_off = spectral_symbol(&g, &offset_section(ctx, PAdicRational::new(p, 1, 1), 1)?)?;
    println!(
        "\nspectrum straddling two cosets (|g|^2 = {:.4}):",
        g.norm_sq()
    );
    println!("symbol values, canonical vs offset (different multisets):");
    for (a, b) in phi_can
        .real_values_at_level(2)?
        .iter()
        .zip(phi_off.real_values_at_level(2)?)
    {
        println!("  {a:.6}  |  {b:.6}");
    }
    let r_can = frame_report(&phi_can, 1e-9)?;
    let r_off = frame_report(&phi_off, 1e-9)?;
    println!(
        "canonical: A = {:.1}, B = {:.1}, zero measure = {}, tight = {}",
        r_can.lower, r_can.upper, r_can.zero_measure, r_can.is_tight
    );
    println!(
        "offset:    A = {:.1}, B = {:.1}, zero measure = {}, tight = {}",
        r_off.lower, r_off.upper, r_off.zero_measure, r_off.is_tight
    );
    println!(
        "mass balance holds under both: {:.4} = {:.4} = |g|^2",
        phi_can.integral().re,
        phi_off.integral().re
    );

    // --- Within each section, the Gram route confirms the symbol route. --
    for (label, section) in [
        ("canonical", canonical),
        ("offset", offset_section(ctx, PAdicRational::new(p, 1, 1), 1)?),
    ] {
        let eigen = hermitian_eigenvalues(&gram_matrix(&g, &section, 2, 243)?)?;
        let mut symbol = spectral_symbol(&g, &section)?.real_values_at_level(2)?;
        symbol.sort_by(f64::total_cmp);
        let gap: f64 = eigen
            .iter()
            .zip(&symbol)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("Gram spectrum vs symbol values, {label} section: max gap {gap:.2e}");
    }

    Ok(())
}

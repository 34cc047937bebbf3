//! The spectral symbol and the frame criterion it decides.
//!
//! The symbol of f is the Z_p-periodization of |f^|^2 under a section: a
//! real, nonnegative function on Z_p, constant on finitely many classes.
//! Its essential range decides everything about the system of translates of
//! f: the infimum off the zero set is the lower frame bound, the supremum
//! the upper, and the measure of the zero set tells which coefficients are
//! invisible.

use padic_frames::spectral::{fourier_coefficients, frame_report, spectral_symbol};
use padic_frames::translates::translate;
use padic_frames::{GroupContext, PAdicRational, Section, StepFunction};

fn main() -> padic_frames::Result<()> {
    let p = 3;
    let ctx = GroupContext::with_default_level(p)?;
    let section = Section::canonical(ctx);

    // f = 1_(Zp) + 1_(1/3 + Zp): two unit-ball bumps, one coset apart.
    let f = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?
        .add(&StepFunction::indicator(ctx, &PAdicRational::new(p, 1, 1), 0, None)?)?;
    println!("f = 1_Zp + 1_(1/3 + Zp), |f|^2 = {:.1}", f.norm_sq());

    let phi = spectral_symbol(&f, &section)?;
    println!(
        "symbol: constant on {} classes of level {}",
        phi.class_count(),
        phi.level()
    );
    for (e, value) in phi.values().iter().enumerate() {
        println!("  class {e} + {} Zp: {:.6}", phi.class_count(), value.re);
    }
    println!(
        "  mass balance: integral(symbol) = {:.6} = |f|^2",
        phi.integral().re
    );

    // Frame bounds read straight off the value multiset.
    let report = frame_report(&phi, 1e-9)?;
    println!(
        "frame report: A = {:.9}, B = {:.9}, zero measure = {}, frame = {}, tight = {}",
        report.lower, report.upper, report.zero_measure, report.is_frame, report.is_tight
    );

    // The symbol's Fourier coefficients are exactly the inner products of f
    // with its own translates — computed here along both routes.
    println!("coefficients of the symbol vs direct translate inner products:");
    for (class, coeff) in fourier_coefficients(&phi) {
        let direct = f.inner(&translate(&f, &class, &section)?)?;
        println!(
            "  {class}: symbol route {:+.6} {:+.6}i, direct route {:+.6} {:+.6}i",
            coeff.re, coeff.im, direct.re, direct.im
        );
    }

    // CSV form, one row per class — the same table `padic-frames phi` emits.
    print!("{}", phi.to_csv());

    Ok(())
}

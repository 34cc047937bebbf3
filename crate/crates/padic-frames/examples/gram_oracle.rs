//! Brute-force oracles: Gram spectra, frame sums, and identity checks.
//!
//! Everything the spectral side claims can be recomputed the slow way.  The
//! Gram matrix of the level-M translates is circulant, and its eigenvalues
//! are the symbol's values at level M, each repeated p^(M - m) times; frame
//! sums admit both a coefficient-expansion route and a term-by-term
//! enumeration.  The checks here are the same ones `padic-frames verify`
//! runs in bulk.

use padic_frames::oracle::{
    check_frame_inequality, check_frame_sum_consistency, check_synthesis_norm, frame_sum,
    frame_sum_by_enumeration, gram_matrix, hermitian_eigenvalues, synthesize, TrigPolynomial,
};
use padic_frames::sampling::{random_step_function, random_trig_polynomial};
use padic_frames::spectral::spectral_symbol;
use padic_frames::{GroupContext, PAdicRational, Section, StepFunction};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> padic_frames::Result<()> {
    let p = 3;
    let ctx = GroupContext::with_default_level(p)?;
    let section = Section::canonical(ctx);

    // The two-bump generator again: symbol values {4, 1, 1} at level 1.
    let f = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?
        .add(&StepFunction::indicator(ctx, &PAdicRational::new(p, 1, 1), 0, None)?)?;
    let phi = spectral_symbol(&f, &section)?;

    // Gram matrix of the 9 level-2 translates: 9 x 9, circulant, Hermitian.
    let gram = gram_matrix(&f, &section, 2, 243)?;
    println!(
        "Gram matrix of level-{} translates: {} x {}, hermitian defect {:.1e}, circulant defect {:.1e}",
        gram.level(),
        gram.dim(),
        gram.dim(),
        gram.max_hermitian_defect(),
        gram.max_circulant_defect()
    );

    // Its spectrum is the symbol's level-2 value multiset: each level-1
    // value repeated 3 times.
    let eigen = hermitian_eigenvalues(&gram)?;
    let mut expected = phi.real_values_at_level(2)?;
    expected.sort_by(f64::total_cmp);
    println!("eigenvalues vs symbol values (ascending):");
    for (lambda, value) in eigen.iter().zip(&expected) {
        println!("  {lambda:.9}  |  {value:.9}");
    }

    // Frame sums along both routes, for a random analyzed function.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let g = random_step_function(ctx, 1, 2, &mut rng)?;
    let fast = frame_sum(&g, &f, &section)?;
    let slow = frame_sum_by_enumeration(&g, &f, &section)?;
    println!(
        "frame sum of a random g: expansion route {:.9}, enumeration route {:.9}",
        fast, slow
    );
    let consistency = check_frame_sum_consistency(&g, &f, &section, 1e-10)?;
    println!(
        "  relative error {:.2e}, pass = {}",
        consistency.rel_error, consistency.pass
    );

    // Synthesis: finite coefficient polynomials applied to the translates.
    let theta = random_trig_polynomial(ctx, 2, &mut rng)?;
    let spanned = synthesize(&f, &theta, &section)?;
    println!(
        "synthesized {} terms into a function with |g|^2 = {:.6}",
        theta.len(),
        spanned.norm_sq()
    );
    let norm_check = check_synthesis_norm(&f, &theta, &section, 1e-10)?;
    println!(
        "  |synthesis|^2 vs weighted energy: lhs {:.9}, rhs {:.9}, pass = {}",
        norm_check.lhs, norm_check.rhs, norm_check.pass
    );

    // A class indicator concentrates all coefficient energy on one class, so
    // its energy ratio hits the symbol value there — that is how the frame
    // inequality's bounds are attained.
    let probe = TrigPolynomial::class_indicator(ctx, 1, 0)?;
    let g0 = synthesize(&f, &probe, &section)?;
    println!(
        "class-indicator probe at [0]: frame sum / |g|^2 = {:.6}",
        frame_sum(&g0, &f, &section)? / g0.norm_sq()
    );

    // The full stress test: random coefficients against A and B.
    let report = check_frame_inequality(&f, &section, 50, 17, 1e-9)?;
    println!(
        "frame inequality over {} trials: {} violations, max relative slack {:.2e}",
        report.trials, report.violations, report.max_relative_violation
    );
    println!(
        "  bounds A = {:.6}, B = {:.6}; lower attained = {}, upper attained = {}",
        report.bounds.lower, report.bounds.upper, report.lower_attained, report.upper_attained
    );

    Ok(())
}

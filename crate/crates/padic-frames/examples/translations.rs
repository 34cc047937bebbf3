//! Translation operators indexed by classes of Q_p / Z_p.
//!
//! Translating by the class [b] multiplies the transform by the frequency
//! weight w_b; the result depends only on the class, not on the rational
//! chosen to name it.  On Z_p-coset indicators this is the ordinary shift;
//! on finer structure it is a twisted shift — and in exchange, composition
//! obeys the group law exactly, which no point-based shift indexed by
//! classes could do.

use padic_frames::sampling::random_step_function;
use padic_frames::translates::{pointwise_shift, translate};
use padic_frames::{
    character, pruefer_add, GroupContext, PAdicRational, PrueferElement, Section, StepFunction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> padic_frames::Result<()> {
    let p = 3;
    let ctx = GroupContext::with_default_level(p)?;
    let section = Section::canonical(ctx);

    // On the unit ball, translating by [1/3] is exactly the shift to the
    // coset 1/3 + Z_p.
    let ball = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?;
    let b = PrueferElement::new(p, 1, 1);
    let tf = translate(&ball, &b, &section)?;
    for num in [0i64, 1, 2] {
        let x = PAdicRational::new(p, num, 1);
        println!("(tau_{b} 1_Zp)({x}) = {:+.4}", tf.value_at(&x).re);
    }

    // The class is all that matters: 1/3 and 1/3 + 2 name the same element
    // of Q_p / Z_p, and the operator sees only the class.
    let same_class =
        PrueferElement::from_rational(&(b.representative() + PAdicRational::from_integer(p, 2)));
    let tf2 = translate(&ball, &same_class, &section)?;
    println!(
        "translating by 1/3 + 2 instead: sup distance {:.2e}",
        tf2.sup_distance(&tf)?
    );

    // Below the Z_p scale the operator is a twisted shift, not the naive
    // one: it moves |f|^2 around the coset but keeps the class-only law.
    let fine = StepFunction::indicator(ctx, &PAdicRational::zero(p), 1, None)?;
    let twisted = translate(&fine, &b, &section)?;
    let naive = pointwise_shift(&fine, &b.representative())?;
    println!(
        "on 1_(3 Zp): |tau_b f|^2 = {:.6} = |f|^2, but sup distance to the naive shift is {:.4}",
        twisted.norm_sq(),
        twisted.sup_distance(&naive)?
    );

    // Group law: tau_a tau_b = tau_(a+b), exactly, on arbitrary functions.
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let f = random_step_function(ctx, 1, 2, &mut rng)?;
    let a = PrueferElement::new(p, 4, 2);
    let composed = translate(&translate(&f, &b, &section)?, &a, &section)?;
    let direct = translate(&f, &pruefer_add(&a, &b)?, &section)?;
    println!(
        "group law tau_a tau_b vs tau_(a+b) on a random f: sup distance {:.2e}",
        composed.sup_distance(&direct)?
    );
    println!(
        "norm preservation: |f|^2 = {:.6}, |tau_a tau_b f|^2 = {:.6}",
        f.norm_sq(),
        composed.norm_sq()
    );

    // The general oracle: on a modulated ball indicator g = (., beta)
    // 1_(c + Zp), translating by [b] equals shifting by any representative
    // point times the single phase (b, sigma_beta).
    let beta = PAdicRational::new(p, 5, 2);
    let g = StepFunction::indicator(ctx, &PAdicRational::from_integer(p, 1), 0, Some(&beta))?;
    let b_point = b.representative() + PAdicRational::from_integer(p, 1);
    let phase = character(&b_point, &section.representative(&beta));
    let expected = pointwise_shift(&g, &b_point)?.scale(phase);
    println!(
        "modulated indicator: tau_b g vs phase * shift_b g, sup distance {:.2e}",
        translate(&g, &b, &section)?.sup_distance(&expected)?
    );

    Ok(())
}

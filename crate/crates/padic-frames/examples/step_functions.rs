//! Step functions: resolution grids, inner products, and periodization.
//!
//! A step function at resolution (m, k) lives on p^{-m} Z_p, is constant on
//! cosets of p^k Z_p, and is stored as p^{m+k} coefficients with coset
//! measure p^{-k}.  Refinement changes the grid without changing the
//! function, so norms and inner products are resolution-independent.

use num_complex::Complex64;
use padic_frames::{GroupContext, PAdicRational, StepFunction};

fn main() -> padic_frames::Result<()> {
    let p = 3;
    let ctx = GroupContext::with_default_level(p)?;

    // The unit ball indicator at its minimal resolution (0, 0): one cell.
    let ball = StepFunction::indicator(ctx, &PAdicRational::zero(p), 0, None)?;
    println!(
        "1_Zp: resolution ({}, {}), {} coefficient(s), measure {}",
        ball.support_level(),
        ball.constancy_level(),
        ball.len(),
        ball.integral().re
    );

    // Refining to (1, 2) stores the same function on 27 cells.
    let fine = ball.refine(1, 2)?;
    println!(
        "refined to ({}, {}): {} coefficients, integral {}, sup distance {:.1e}",
        fine.support_level(),
        fine.constancy_level(),
        fine.len(),
        fine.integral().re,
        fine.sup_distance(&ball)?
    );

    // A modulated indicator: x -> (x, 1/p) on 2 + 3 Z_p.
    let center = PAdicRational::from_integer(p, 2);
    let beta = PAdicRational::new(p, 1, 1);
    let g = StepFunction::indicator(ctx, &center, 1, Some(&beta))?;
    println!(
        "modulated coset indicator: resolution ({}, {}), norm^2 = {:.6}",
        g.support_level(),
        g.constancy_level(),
        g.norm_sq()
    );

    // Inner products refine both operands to a common grid first.
    let ip = ball.inner(&g)?;
    println!("<1_Zp, g> = {:+.6} {:+.6}i", ip.re, ip.im);

    // Pointwise evaluation agrees with the coefficient at the matching cell.
    let x = PAdicRational::from_integer(p, 5); // 5 = 2 + 3 in Z_p
    let v = g.value_at(&x);
    println!("g(5) = {:+.6} {:+.6}i  (5 lies in 2 + 3 Z_p)", v.re, v.im);

    // Periodization sums f over Z_p-cosets; the unit ball collapses to the
    // single class [0], a two-cell function on (1/3) Z_p to two classes.
    let mut spread = StepFunction::indicator(ctx, &PAdicRational::new(p, 1, 1), 0, None)?;
    spread = spread.add(&ball.refine(1, 0)?.scale(Complex64::new(2.0, 0.0)))?;
    println!("periodization of 2 * 1_Zp + 1_(1/3 + Zp):");
    for (class, total) in spread.weil_periodize() {
        println!("  class {class}: {:+.4} {:+.4}i", total.re, total.im);
    }

    // compact() drops padding and returns to the minimal exact resolution.
    let wasteful = ball.refine(2, 3)?;
    let tight = wasteful.compact();
    println!(
        "compacted ({}, {}) back to ({}, {})",
        wasteful.support_level(),
        wasteful.constancy_level(),
        tight.support_level(),
        tight.constancy_level()
    );

    Ok(())
}

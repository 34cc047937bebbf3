//! Exact arithmetic in Z[1/p] and the character pairing.
//!
//! Every point this crate touches is a rational num / p^exp, stored exactly.
//! The pairing (x, gamma) = exp(2 pi i {x gamma}) depends only on the
//! fractional part of the product, so integral points pair trivially with
//! everything in Z_p.

use padic_frames::padic::parse_rational;
use padic_frames::{character, PAdicRational};

fn main() -> padic_frames::Result<()> {
    let p = 3;

    let x = PAdicRational::new(p, 5, 2); // 5/9
    let y = PAdicRational::new(p, 2, 1); // 2/3
    println!("x = {x}, y = {y}  (p = {p})");
    println!("x + y = {}", x + y);
    println!("x - y = {}", x - y);
    println!("x * y = {}", x * y);

    // Stored forms are always reduced: 6/27 collapses to 2/9.
    let unreduced = PAdicRational::new(p, 6, 3);
    println!("new(6, 3) reduces to {unreduced}");

    // Valuation counts powers of p; the fractional part keeps exactly the
    // negative-valuation tail.
    let z = PAdicRational::new(p, 35, 2) + PAdicRational::from_integer(p, 4);
    println!(
        "z = {z}: valuation {}, fractional part {}, integral part {}",
        z.valuation()?,
        z.fractional_part(),
        z.integral_part()
    );

    // The Display form round-trips through the parser.
    let back = parse_rational(p, &z.to_string())?;
    assert_eq!(back, z);
    println!("parse(\"{z}\") round-trips exactly");

    // Characters: (x, gamma) lands on a p^k-th root of unity.
    let gamma = PAdicRational::new(p, 1, 1);
    for num in 0..3 {
        let x = PAdicRational::new(p, num, 1);
        let chi = character(&x, &gamma);
        println!("({x}, {gamma}) = {:+.6} {:+.6}i", chi.re, chi.im);
    }

    // Bilinearity in the exponent: (x + y, gamma) = (x, gamma)(y, gamma).
    let lhs = character(&(x + y), &gamma);
    let rhs = character(&x, &gamma) * character(&y, &gamma);
    println!(
        "additivity defect |(x+y, gamma) - (x, gamma)(y, gamma)| = {:.2e}",
        (lhs - rhs).norm()
    );

    // Integral times integral never leaves Z_p, so the pairing is 1.
    let n = PAdicRational::from_integer(p, 7);
    let m = PAdicRational::from_integer(p, -12);
    let chi = character(&n, &m);
    println!("integral pairing ({n}, {m}) = {:+.1} {:+.1}i", chi.re, chi.im);

    Ok(())
}

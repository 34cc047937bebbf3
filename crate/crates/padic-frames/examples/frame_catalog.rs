//! The four named generator families and their closed-form behavior.
//!
//! Each family has exact frame bounds known in advance, so running one is a
//! complete end-to-end test: build the generator, compute the symbol, read
//! the bounds, diagonalize a Gram matrix, and compare against the closed
//! form.  The `padic-frames example` subcommand prints these same reports as
//! JSON.

use padic_frames::catalog::{run_example, NamedExample};

fn main() -> padic_frames::Result<()> {
    let configurations: &[(NamedExample, u64, u32)] = &[
        (NamedExample::TwoCosets, 3, 1),
        (NamedExample::TwoCosets, 5, 2),
        (NamedExample::TwoCosetsDyadic, 2, 1),
        (NamedExample::TwoCosetsDyadic, 2, 3),
        (NamedExample::ScaledSmallBall, 3, 2),
        (NamedExample::WideBall, 2, 2),
    ];

    for &(example, p, size) in configurations {
        let run = run_example(example, p, size, &[], 1e-9, 243)?;
        let r = &run.report;
        println!(
            "{} (p = {p}, size = {size}):",
            example.token()
        );
        println!(
            "  A = {:.9}, B = {:.9}, zero measure = {:.9}",
            r.lower, r.upper, r.zero_measure
        );
        println!(
            "  frame = {}, tight = {}, parseval = {}, matches expected = {}",
            r.is_frame, r.is_tight, r.is_parseval, r.matches_expected
        );
        println!(
            "  symbol level {} with {} values, integral {:.6} = |f|^2 = {:.6}",
            r.symbol_level,
            r.symbol_values.len(),
            r.symbol_integral,
            r.generator_norm_sq
        );
        println!(
            "  Gram spectrum at level {}: {:?}",
            r.gram_level,
            &r.gram_eigenvalues[..r.gram_eigenvalues.len().min(6)]
        );
        for note in &r.notes {
            println!("  note: {note}");
        }
        println!();
    }

    Ok(())
}

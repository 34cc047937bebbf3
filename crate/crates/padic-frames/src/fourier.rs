//! The Fourier transform on Q_p as an exact finite DFT.
//!
//! For f at resolution (m, k) put N = p^(m+k).  Sampling the defining
//! integral on the coefficient grid gives
//!
//!   fhat(j p^{-k}) = p^{-k} * sum_n f_n exp(-2 pi i n j / N),
//!
//! a size-N DFT: the transform of a step function at (m, k) is a step
//! function at (k, m), exactly.  The inverse transform is the conjugate
//! kernel weighted by p^{-m}.  Twiddle factors are always computed from the
//! exact integer n*j mod N, never by accumulating phases, so the only
//! floating-point error is the final sum itself.
//!
//! [`fourier`] is the quadratic-time reference; [`fourier_fast`] is a
//! radix-p Cooley-Tukey evaluation of the same sums.  The fast path is
//! validated against the reference in the test suite and by the `verify`
//! subcommand, never trusted alone.

use num_complex::Complex64;

use crate::stepfn::StepFunction;

/// Forward transform, reference implementation (naive O(N^2) sum).
pub fn fourier(f: &StepFunction) -> StepFunction {
    transform(f, Direction::Forward, Algorithm::Reference)
}

/// Inverse transform, reference implementation.
pub fn inverse_fourier(f: &StepFunction) -> StepFunction {
    transform(f, Direction::Inverse, Algorithm::Reference)
}

/// Forward transform via radix-p Cooley-Tukey; same contract as [`fourier`].
pub fn fourier_fast(f: &StepFunction) -> StepFunction {
    transform(f, Direction::Forward, Algorithm::RadixP)
}

/// Inverse transform via radix-p Cooley-Tukey.
pub fn inverse_fourier_fast(f: &StepFunction) -> StepFunction {
    transform(f, Direction::Inverse, Algorithm::RadixP)
}

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy)]
enum Algorithm {
    Reference,
    RadixP,
}

fn transform(f: &StepFunction, direction: Direction, algorithm: Algorithm) -> StepFunction {
    let p = f.prime() as usize;
    let n = f.len();
    let table = twiddle_table(n, direction);
    let raw = match algorithm {
        Algorithm::Reference => dft_reference(f.coeffs(), &table),
        Algorithm::RadixP => dft_radix_p(f.coeffs(), p, &table, 1),
    };
    // The defining integral carries the measure p^{-c} of one constancy
    // coset of the input.
    let weight = 1.0 / f.context().grid_size(f.constancy_level()) as f64;
    let coeffs = raw.into_iter().map(|c| c * weight).collect();
    StepFunction::new(
        f.context(),
        f.constancy_level(),
        f.support_level(),
        coeffs,
    )
    .expect("transform keeps the total resolution m + k")
}

/// exp(sign * 2 pi i t / n) for t = 0 .. n, from exact integer angles.
fn twiddle_table(n: usize, direction: Direction) -> Vec<Complex64> {
    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    (0..n)
        .map(|t| Complex64::cis(sign * std::f64::consts::TAU * t as f64 / n as f64))
        .collect()
}

fn dft_reference(input: &[Complex64], table: &[Complex64]) -> Vec<Complex64> {
    let n = input.len();
    (0..n)
        .map(|j| {
            input
                .iter()
                .enumerate()
                .map(|(t, c)| c * table[(t * j) % n])
                .sum()
        })
        .collect()
}

/// Recursive radix-p decimation in time.  `stride` maps local twiddle
/// indices into the shared full-size table: at sublength n the factor
/// omega_n^t equals table[t * stride] where stride = N_total / n.
fn dft_radix_p(input: &[Complex64], p: usize, table: &[Complex64], stride: usize) -> Vec<Complex64> {
    let n = input.len();
    if n == 1 {
        return input.to_vec();
    }
    let m = n / p;
    debug_assert_eq!(m * p, n);
    let sub_dfts: Vec<Vec<Complex64>> = (0..p)
        .map(|r| {
            let sub: Vec<Complex64> = (0..m).map(|t| input[t * p + r]).collect();
            dft_radix_p(&sub, p, table, stride * p)
        })
        .collect();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (j, slot) in out.iter_mut().enumerate() {
        let s = j % m;
        let mut acc = Complex64::new(0.0, 0.0);
        for (r, sub) in sub_dfts.iter().enumerate() {
            acc += table[(j * r) % n * stride] * sub[s];
        }
        *slot = acc;
    }
    out
}

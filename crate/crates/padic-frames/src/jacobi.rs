//! Eigenvalues of dense Hermitian matrices by cyclic Jacobi rotations.
//!
//! Each rotation zeroes one off-diagonal pair (p, q): a diagonal phase turns
//! the pivot entry real, then a plane rotation annihilates it exactly as in
//! the real symmetric case.  Sweeping all pairs repeatedly drives the
//! off-diagonal mass to zero quadratically; for the matrix sizes this crate
//! produces (a few hundred at most) that takes a handful of sweeps.
//!
//! The accumulated unitary is kept so callers can check residuals
//! A v = lambda v independently of this module's own convergence test.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative off-diagonal mass at which iteration stops.
const CONVERGENCE: f64 = 1e-15;

/// Hard sweep limit; Jacobi on a Hermitian matrix converges far sooner.
const MAX_SWEEPS: usize = 60;

/// Relative asymmetry beyond which input is rejected as non-Hermitian.
const HERMITIAN_TOL: f64 = 1e-10;

/// An eigendecomposition: `values[l]` belongs to the column `l` of
/// `vectors`, values sorted ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    dim: usize,
    values: Vec<f64>,
    vectors: Vec<Complex64>,
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The unit eigenvector for `values()[l]`.
    pub fn vector(&self, l: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self.vectors[i * self.dim + l]).collect()
    }
}

/// Full eigendecomposition of a Hermitian matrix given in row-major order.
///
/// The input must be Hermitian to within a small relative tolerance; the
/// computation then runs on its exactly Hermitian part (A + A*)/2.
pub fn hermitian_eigen(entries: &[Complex64], dim: usize) -> Result<HermitianEigen> {
    if entries.len() != dim * dim {
        return Err(Error::InvalidParameter(format!(
            "matrix of dimension {dim} needs {} entries, got {}",
            dim * dim,
            entries.len()
        )));
    }
    if dim == 0 {
        return Ok(HermitianEigen {
            dim: 0,
            values: Vec::new(),
            vectors: Vec::new(),
        });
    }

    let scale = entries.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let asymmetry = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .map(|(i, j)| (entries[i * dim + j] - entries[j * dim + i].conj()).norm())
        .fold(0.0, f64::max);
    if scale > 0.0 && asymmetry > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian {
            max_asymmetry: asymmetry,
        });
    }

    // Work on the Hermitian part so rounding asymmetry cannot accumulate.
    let mut a: Vec<Complex64> = (0..dim * dim)
        .map(|idx| {
            let (i, j) = (idx / dim, idx % dim);
            (entries[i * dim + j] + entries[j * dim + i].conj()) * 0.5
        })
        .collect();
    let mut v: Vec<Complex64> = (0..dim * dim)
        .map(|idx| {
            if idx / dim == idx % dim {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();

    let frobenius = a.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let target = (CONVERGENCE * frobenius.max(f64::MIN_POSITIVE)).powi(2);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .map(|(i, j)| a[i * dim + j].norm_sqr())
            .sum();
        if off <= target {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                rotate(&mut a, &mut v, dim, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| {
        a[i * dim + i]
            .re
            .partial_cmp(&a[j * dim + j].re)
            .expect("diagonal entries are finite")
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * dim + i].re).collect();
    let mut vectors = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..dim {
            vectors[row * dim + new_col] = v[row * dim + old_col];
        }
    }
    Ok(HermitianEigen {
        dim,
        values,
        vectors,
    })
}

/// One Jacobi rotation zeroing the (p, q) entry of the Hermitian matrix `a`,
/// accumulated into `v`.
fn rotate(a: &mut [Complex64], v: &mut [Complex64], dim: usize, p: usize, q: usize) {
    let g = a[p * dim + q];
    let mag = g.norm();
    if mag == 0.0 {
        return;
    }
    // Phase u turns the pivot real; then a plane rotation with tangent t
    // (the root of t^2 - 2 theta t - 1 of smaller magnitude) kills it.
    let u = g / mag;
    let alpha = a[p * dim + p].re;
    let beta = a[q * dim + q].re;
    let theta = (beta - alpha) / (2.0 * mag);
    let t = if theta >= 0.0 {
        -1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (theta - (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let su = s * u;
    let su_conj = s * u.conj();

    // Rows p and q: A <- U* A.
    for j in 0..dim {
        let ap = a[p * dim + j];
        let aq = a[q * dim + j];
        a[p * dim + j] = c * ap + su * aq;
        a[q * dim + j] = -s * ap + c * u * aq;
    }
    // Columns p and q: A <- A U, and the same update for the accumulated V.
    for i in 0..dim {
        let ap = a[i * dim + p];
        let aq = a[i * dim + q];
        a[i * dim + p] = c * ap + su_conj * aq;
        a[i * dim + q] = -s * ap + c * u.conj() * aq;

        let vp = v[i * dim + p];
        let vq = v[i * dim + q];
        v[i * dim + p] = c * vp + su_conj * vq;
        v[i * dim + q] = -s * vp + c * u.conj() * vq;
    }
    // The pivot pair is now zero by construction; store that exactly.
    a[p * dim + q] = Complex64::new(0.0, 0.0);
    a[q * dim + p] = Complex64::new(0.0, 0.0);
    a[p * dim + p].im = 0.0;
    a[q * dim + q].im = 0.0;
}

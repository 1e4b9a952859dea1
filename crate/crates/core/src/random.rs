//! Seeded random sources. Every randomized routine in the crate takes an
//! explicit `u64` seed and draws from its own ChaCha8 stream.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::space::ComplexVec;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard complex Gaussian: real and imaginary parts `N(0, 1/2)`.
pub fn complex_gaussian_scalar<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVec {
    ComplexVec::new((0..dim).map(|_| complex_gaussian_scalar(rng)).collect()).expect("dim ≥ 1")
}

/// A nonzero Gaussian vector, redrawn until its norm exceeds `1e-8`.
pub fn nonzero_complex_gaussian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVec {
    loop {
        let v = complex_gaussian(rng, dim);
        if v.norm() > 1e-8 {
            return v;
        }
    }
}

pub fn unit_complex_gaussian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexVec {
    let v = nonzero_complex_gaussian(rng, dim);
    v.scale_real(1.0 / v.norm())
}

pub fn complex_gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| complex_gaussian_scalar(rng))
}

pub fn real_gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.sample(StandardNormal))
}

/// 64-bit FNV-1a; stable across platforms and builds.
pub fn stable_hash(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3))
}

/// Seed for an independent sub-task identified by `label`.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    seed ^ stable_hash(label.as_bytes())
}

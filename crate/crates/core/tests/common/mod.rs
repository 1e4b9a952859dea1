#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use orthopreserve::random::{complex_gaussian_matrix, real_gaussian_matrix, seeded};
use orthopreserve::synth::random_real_isometry;
use orthopreserve::{random_op_map, ComplexVec, OpKind, RealLinearMap};
use rand::Rng;

/// Dimensions and kind for a random orthogonality-preserving isometry.
pub fn random_op_isometry(seed: u64) -> (RealLinearMap, OpKind) {
    let mut rng = seeded(seed ^ 0x5eed_0f_0b);
    let m = rng.random_range(2..=4);
    let kind = match rng.random_range(0..4) {
        0 => OpKind::PureLinear,
        1 => OpKind::PureConjugate,
        _ => OpKind::Mixed,
    };
    let min_n = if kind == OpKind::Mixed { 2 * m } else { m };
    let n = min_n + rng.random_range(0..=2);
    (random_op_map(m, n, kind, seed).expect("compatible dimensions"), kind)
}

pub fn random_mixed_isometry(seed: u64) -> RealLinearMap {
    let mut rng = seeded(seed ^ 0x0d1c_e5);
    let m = rng.random_range(2..=4);
    let n = 2 * m + rng.random_range(0..=2);
    random_op_map(m, n, OpKind::Mixed, seed).expect("n ≥ 2m")
}

/// Arbitrary real-linear map with Gaussian parts.
pub fn random_arbitrary_map(m: usize, n: usize, seed: u64) -> RealLinearMap {
    let mut rng = seeded(seed);
    RealLinearMap::new(complex_gaussian_matrix(&mut rng, n, m), complex_gaussian_matrix(&mut rng, n, m)).unwrap()
}

/// `T + ε·G` for a Gaussian real perturbation `G` of the real form.
pub fn perturbed(t: &RealLinearMap, eps: f64, seed: u64) -> RealLinearMap {
    let real = t.real_form();
    let noise = real_gaussian_matrix(&mut seeded(seed), real.nrows(), real.ncols());
    RealLinearMap::from_real_form(real + noise * eps).unwrap()
}

/// A mixed isometry into `ℂ^{2m}` with the codomain cut down to its first
/// `n` coordinates.
pub fn truncated_mixed(m: usize, n: usize, seed: u64) -> RealLinearMap {
    let full = random_op_map(m, 2 * m, OpKind::Mixed, seed).unwrap();
    let rows = full.real_form().rows(0, 2 * n).into_owned();
    RealLinearMap::from_real_form(rows).unwrap()
}

pub fn real_isometry(m: usize, n: usize, seed: u64) -> RealLinearMap {
    random_real_isometry(m, n, seed).unwrap()
}

/// `min_α ‖x + αy‖` by nested 200×200 grid searches, each zoomed on the
/// best point of the previous one.
pub fn grid_birkhoff_min(x: &ComplexVec, y: &ComplexVec) -> f64 {
    let n = 200;
    let mut center = Complex64::new(0.0, 0.0);
    let mut half = 2.0 * x.norm() / y.norm() + 1.0;
    let mut best = (center, f64::INFINITY);
    for _ in 0..3 {
        let step = 2.0 * half / (n - 1) as f64;
        for a in 0..n {
            for b in 0..n {
                let alpha = center + Complex64::new(-half + a as f64 * step, -half + b as f64 * step);
                let v: f64 = x
                    .entries()
                    .iter()
                    .zip(y.entries())
                    .map(|(p, q)| (p + alpha * q).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                if v < best.1 {
                    best = (alpha, v);
                }
            }
        }
        center = best.0;
        half = 2.0 * step;
    }
    best.1
}

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

pub fn report(id: u32, pass: bool, detail: &str) {
    println!("[{}] criterion {id}: {detail}", if pass { "PASS" } else { "FAIL" });
}

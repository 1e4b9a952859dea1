//! Orthogonality predicates, orthogonal projection and seeded orthogonal
//! pairs.
//!
//! In an inner product space Birkhoff–James orthogonality (`‖x + αy‖ ≥ ‖x‖`
//! for every complex `α`) coincides with `⟨x|y⟩ = 0`. Both predicates are
//! exposed so the equivalence can be checked numerically.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::random::{nonzero_complex_gaussian, seeded, SeededRng};
use crate::space::{inner, inner_unchecked, ComplexVec};

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Precondition(format!("tolerance must be positive and finite, got {tol}")));
    }
    Ok(())
}

/// `|⟨x|y⟩| ≤ tol · max(1, ‖x‖·‖y‖)`.
pub fn is_orthogonal(x: &ComplexVec, y: &ComplexVec, tol: f64) -> Result<bool> {
    check_tol(tol)?;
    let ip = inner(x, y)?;
    Ok(ip.norm() <= tol * (x.norm() * y.norm()).max(1.0))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BirkhoffMin {
    /// Minimizer of `α ↦ ‖x + αy‖`.
    pub alpha: Complex64,
    pub min_value: f64,
}

/// Closed-form minimum of `‖x + αy‖` over complex `α`.
pub fn birkhoff_min(x: &ComplexVec, y: &ComplexVec) -> Result<BirkhoffMin> {
    let ip = inner(x, y)?;
    let y_sq = y.norm_sqr();
    if y_sq == 0.0 {
        return Err(Error::Degenerate("Birkhoff minimum needs y ≠ 0".into()));
    }
    let alpha = -ip / y_sq;
    let min_value = (x.norm_sqr() - ip.norm_sqr() / y_sq).max(0.0).sqrt();
    Ok(BirkhoffMin { alpha, min_value })
}

/// `x ⊥_B y`, accepted when the minimum of `‖x + αy‖` stays within a
/// relative `tol` of `‖x‖`. Every `x` is Birkhoff-orthogonal to `0`.
pub fn is_birkhoff_orthogonal(x: &ComplexVec, y: &ComplexVec, tol: f64) -> Result<bool> {
    check_tol(tol)?;
    if x.dim() != y.dim() {
        return Err(Error::Dimension(format!("ℂ^{} vs ℂ^{}", x.dim(), y.dim())));
    }
    if y.norm_sqr() == 0.0 {
        return Ok(true);
    }
    let min = birkhoff_min(x, y)?;
    Ok(min.min_value >= x.norm() * (1.0 - tol))
}

/// `w − ⟨w|z⟩·z/‖z‖²`, the component of `w` orthogonal to `z`.
pub fn project_orthogonal(w: &ComplexVec, z: &ComplexVec) -> Result<ComplexVec> {
    let ip = inner(w, z)?;
    let z_sq = z.norm_sqr();
    if z_sq == 0.0 {
        return Err(Error::Degenerate("cannot project against the zero vector".into()));
    }
    Ok(w - &z.scale(ip / z_sq))
}

/// Endless stream of orthogonal pairs of nonzero complex-Gaussian vectors.
pub struct OrthogonalPairs {
    rng: SeededRng,
    dim: usize,
}

impl OrthogonalPairs {
    pub fn new(dim: usize, seed: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Dimension(format!("orthogonal pairs need dimension ≥ 2, got {dim}")));
        }
        Ok(Self { rng: seeded(seed), dim })
    }
}

impl Iterator for OrthogonalPairs {
    type Item = (ComplexVec, ComplexVec);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let x = nonzero_complex_gaussian(&mut self.rng, self.dim);
            let w = nonzero_complex_gaussian(&mut self.rng, self.dim);
            let mut y = project_orthogonal(&w, &x).expect("x is nonzero");
            // One more sweep removes the roundoff left by the first.
            y = project_orthogonal(&y, &x).expect("x is nonzero");
            if y.norm() > 1e-6 * w.norm() && inner_unchecked(&x, &y).norm() <= 1e-12 * x.norm() * y.norm() {
                return Some((x, y));
            }
        }
    }
}

/// `count` orthogonal pairs in `ℂ^m`, deterministic in `seed`.
pub fn sample_orthogonal_pairs(m: usize, count: usize, seed: u64) -> Result<Vec<(ComplexVec, ComplexVec)>> {
    Ok(OrthogonalPairs::new(m, seed)?.take(count).collect())
}

//! Factorization of a map as `γ·T` with `γ > 0` and `T` a real-linear
//! isometry.
//!
//! A nonzero real-linear map preserving orthogonality on a space of
//! dimension at least two is always of this form, so failure here already
//! rules out orthogonality preservation.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::map::RealLinearMap;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ScaledIsometry {
    pub gamma: f64,
    pub isometry: RealLinearMap,
}

fn max_deviation_from_scaled_identity(gram: &DMatrix<f64>, scale: f64) -> f64 {
    let n = gram.nrows();
    let mut worst = 0.0f64;
    for r in 0..n {
        for c in 0..n {
            let target = if r == c { scale } else { 0.0 };
            worst = worst.max((gram[(r, c)] - target).abs());
        }
    }
    worst
}

/// Writes `A = γ·T`, with `γ² = trace(MᵀM)/(2m)` for the real form `M`.
///
/// Succeeds iff `‖MᵀM − γ²I‖_max ≤ tol·γ²`.
pub fn wojcik_decompose(a: &RealLinearMap, tol: f64) -> Result<ScaledIsometry> {
    if a.dim_h() < 2 {
        return Err(Error::Dimension(format!("domain dimension must be at least 2, got {}", a.dim_h())));
    }
    if a.is_zero() {
        return Err(Error::ZeroMap);
    }
    let m = a.real_form();
    let gram = m.transpose() * m;
    let gamma_sq = gram.trace() / gram.nrows() as f64;
    let deviation = max_deviation_from_scaled_identity(&gram, gamma_sq);
    if !(deviation <= tol * gamma_sq) {
        return Err(Error::NotScaledIsometry { deviation: deviation / gamma_sq });
    }
    let gamma = gamma_sq.sqrt();
    Ok(ScaledIsometry { gamma, isometry: a.scale(1.0 / gamma) })
}

/// `MᵀM = I` entrywise within `tol`.
pub fn is_real_isometry(a: &RealLinearMap, tol: f64) -> bool {
    let m = a.real_form();
    let gram = m.transpose() * m;
    max_deviation_from_scaled_identity(&gram, 1.0) <= tol
}

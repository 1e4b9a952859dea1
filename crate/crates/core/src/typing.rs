//! Per-point complex type of a real-linear isometry.
//!
//! For a unit vector `u` write `T(iu) = α·T(u) + η` with `α = ⟨T(iu)|T(u)⟩`
//! and `η ⊥ T(u)`. For isometries `α = i·s` with `s ∈ [−1, 1]` and
//! `s² + ‖η‖² = 1`. The point is of *pure* complex type when `η = 0`
//! (`T(iu) = ±i·T(u)`) and of *mixed* type otherwise. For maps that
//! preserve orthogonality the type, `s` and `‖η‖` do not depend on the
//! point.

use num_complex::Complex64;

use crate::decomp::is_real_isometry;
use crate::error::{Error, Result};
use crate::map::RealLinearMap;
use crate::ortho::is_orthogonal;
use crate::space::{inner_unchecked, ComplexVec};

/// Points shorter than this are rejected rather than normalized.
pub const MIN_POINT_NORM: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq)]
pub struct TypeProfile {
    pub point: ComplexVec,
    /// `⟨T(iu)|T(u)⟩` for `u = point/‖point‖`.
    pub alpha: Complex64,
    pub s: f64,
    /// `‖point‖·(T(iu) − α·T(u))`, so that `T(i·point) = α·T(point) + eta`.
    pub eta: ComplexVec,
    pub eta_norm: f64,
}

impl TypeProfile {
    pub fn point_norm(&self) -> f64 {
        self.point.norm()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointType {
    Pure,
    Mixed,
}

pub fn type_profile(t: &RealLinearMap, z: &ComplexVec, tol: f64) -> Result<TypeProfile> {
    if z.dim() != t.dim_h() {
        return Err(Error::Dimension(format!("point lies in ℂ^{} but the map acts on ℂ^{}", z.dim(), t.dim_h())));
    }
    let norm = z.norm();
    if !(norm >= MIN_POINT_NORM) {
        return Err(Error::Degenerate(format!("point norm {norm:e} is below {MIN_POINT_NORM:e}")));
    }
    if !is_real_isometry(t, tol) {
        return Err(Error::Precondition("point types are only defined for real-linear isometries".into()));
    }

    let u = z.scale_real(1.0 / norm);
    let tu = t.apply_unchecked(&u);
    let tiu = t.apply_unchecked(&u.mul_i());
    let alpha = inner_unchecked(&tiu, &tu);
    if alpha.re.abs() > tol {
        return Err(Error::NotOrthogonalityPreservingEvidence { re_alpha: alpha.re });
    }
    let eta = (&tiu - &tu.scale(alpha)).scale_real(norm);
    let eta_norm = eta.norm();
    Ok(TypeProfile { point: z.clone(), alpha, s: alpha.im.clamp(-1.0, 1.0), eta, eta_norm })
}

/// Pure iff `eta_norm ≤ tol·‖point‖`.
pub fn classify_point(profile: &TypeProfile, tol: f64) -> PointType {
    if profile.eta_norm <= tol * profile.point_norm() {
        PointType::Pure
    } else {
        PointType::Mixed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropagationReport {
    pub first: TypeProfile,
    pub second: TypeProfile,
    pub first_type: PointType,
    pub second_type: PointType,
    pub s_equal: bool,
    /// `‖η(x₀)‖/‖x₀‖ = ‖η(x₁)‖/‖x₁‖`.
    pub eta_norm_equal: bool,
    /// `{T(x₀), η(x₀)} ⊥ {T(x₁), η(x₁)}`.
    pub sets_orthogonal: bool,
}

impl PropagationReport {
    pub fn all_hold(&self) -> bool {
        self.s_equal && self.eta_norm_equal && self.sets_orthogonal
    }
}

/// Compares the profiles at two orthogonal points. Every flag holds when
/// `t` preserves orthogonality.
pub fn check_orthogonal_propagation(
    t: &RealLinearMap,
    x0: &ComplexVec,
    x1: &ComplexVec,
    tol: f64,
) -> Result<PropagationReport> {
    if !is_orthogonal(x0, x1, tol)? {
        return Err(Error::Precondition("the two points are not orthogonal".into()));
    }
    let first = type_profile(t, x0, tol)?;
    let second = type_profile(t, x1, tol)?;

    let s_equal = (first.s - second.s).abs() <= tol;
    let eta_norm_equal = (first.eta_norm / first.point_norm() - second.eta_norm / second.point_norm()).abs() <= tol;

    let t0 = t.apply_unchecked(x0);
    let t1 = t.apply_unchecked(x1);
    let mut sets_orthogonal = true;
    for a in [&t0, &first.eta] {
        for b in [&t1, &second.eta] {
            sets_orthogonal &= is_orthogonal(a, b, tol)?;
        }
    }

    Ok(PropagationReport {
        first_type: classify_point(&first, tol),
        second_type: classify_point(&second, tol),
        first,
        second,
        s_equal,
        eta_norm_equal,
        sets_orthogonal,
    })
}

//! Deciding orthogonality preservation and classifying the preserver.
//!
//! A nonzero map `A` preserves orthogonality iff `A = γ·T` with `T`
//! satisfying the Gram identity
//!
//! ```text
//! ⟨Tx|Ty⟩ = Re⟨x|y⟩ + i·s·Im⟨x|y⟩
//! ```
//!
//! for a constant `s ∈ [−1, 1]`. Both sides are real-bilinear, so checking
//! the identity on the real basis `{e_j, i·e_j}` is enough. `s = 1` means
//! complex-linear, `s = −1` conjugate-linear, anything strictly between is
//! a genuinely mixed map, which needs `dim K ≥ 2·dim H`.
//!
//! [`sampling_oracle`] tests the defining property directly on random
//! orthogonal pairs and is kept independent of the Gram-identity decision.

use nalgebra::{DVector, SVD};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::decomp::wojcik_decompose;
use crate::error::{Error, Result};
use crate::map::RealLinearMap;
use crate::ortho::{is_orthogonal, OrthogonalPairs};
use crate::random::{derive_seed, nonzero_complex_gaussian, seeded};
use crate::space::{inner_unchecked, ComplexVec, I};

/// Relative residual below which a vector counts as lying in the range.
pub const RANGE_MEMBERSHIP_TOL: f64 = 1e-8;

/// Seed used by [`classify_map`] for its random criterion point.
pub const CRITERIA_SEED: u64 = 0;

#[derive(Debug, Clone, PartialEq)]
pub struct OpCertificate {
    pub gamma: f64,
    pub s: f64,
    /// `√(1 − s²)`.
    pub c: f64,
    /// Orthogonality is also reflected (`⟨Ax|Ay⟩ = 0 ⇒ ⟨x|y⟩ = 0`) iff `s ≠ 0`.
    pub both_directions: bool,
    /// `(T(e_j), η(e_j))` for the isometry `T = A/γ` and each standard
    /// basis vector, where `T(i·e_j) = i·s·T(e_j) + η(e_j)`.
    pub basis_data: Vec<(ComplexVec, ComplexVec)>,
}

impl OpCertificate {
    pub fn class(&self, tol: f64) -> MapClass {
        if (self.s - 1.0).abs() <= tol {
            MapClass::ComplexLinear
        } else if (self.s + 1.0).abs() <= tol {
            MapClass::ConjugateLinear
        } else {
            MapClass::MixedType
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpDecision {
    Zero,
    Preserving(OpCertificate),
    NotPreserving,
}

impl OpDecision {
    /// The zero map preserves orthogonality trivially.
    pub fn preserves(&self) -> bool {
        !matches!(self, OpDecision::NotPreserving)
    }

    pub fn certificate(&self) -> Option<&OpCertificate> {
        match self {
            OpDecision::Preserving(cert) => Some(cert),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapClass {
    Zero,
    ComplexLinear,
    ConjugateLinear,
    #[serde(rename = "mixed")]
    MixedType,
    NotOrthogonalityPreserving,
}

impl MapClass {
    pub fn as_str(self) -> &'static str {
        match self {
            MapClass::Zero => "zero",
            MapClass::ComplexLinear => "complex_linear",
            MapClass::ConjugateLinear => "conjugate_linear",
            MapClass::MixedType => "mixed",
            MapClass::NotOrthogonalityPreserving => "not_orthogonality_preserving",
        }
    }
}

impl std::fmt::Display for MapClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three pointwise criteria for being complex- or conjugate-linear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaReport {
    /// `A(i·e₁) ∈ {±i·A(e₁)}`.
    pub b: bool,
    /// `A(i·z) ∈ {±i·A(z)}` at a seeded random `z`.
    pub c: bool,
    /// `i·A(e₁)` lies in the range of `A`.
    pub d: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub class: MapClass,
    pub certificate: Option<OpCertificate>,
    /// Absent for the zero map.
    pub criteria: Option<CriteriaReport>,
}

fn require_domain_dim(a: &RealLinearMap) -> Result<()> {
    if a.dim_h() < 2 {
        return Err(Error::Dimension(format!("domain dimension must be at least 2, got {}", a.dim_h())));
    }
    Ok(())
}

/// `⟨u_p|u_q⟩` for the real basis `u_{2j} = e_j`, `u_{2j+1} = i·e_j`.
fn real_basis_inner(p: usize, q: usize) -> Complex64 {
    if p / 2 != q / 2 {
        return Complex64::new(0.0, 0.0);
    }
    match (p % 2, q % 2) {
        (0, 0) | (1, 1) => Complex64::new(1.0, 0.0),
        (1, 0) => I,
        _ => -I,
    }
}

/// Gram-identity decision. Returns [`OpDecision::Zero`] for the zero map.
pub fn is_orthogonality_preserving(a: &RealLinearMap, tol: f64) -> Result<OpDecision> {
    require_domain_dim(a)?;
    if a.is_zero() {
        return Ok(OpDecision::Zero);
    }
    let scaled = match wojcik_decompose(a, tol) {
        Ok(d) => d,
        Err(Error::NotScaledIsometry { .. }) => return Ok(OpDecision::NotPreserving),
        Err(e) => return Err(e),
    };
    let t = &scaled.isometry;

    let images: Vec<ComplexVec> = (0..2 * t.dim_h()).map(|p| t.real_basis_image(p)).collect();
    let s = inner_unchecked(&images[1], &images[0]).im;
    if s.abs() > 1.0 + tol {
        return Ok(OpDecision::NotPreserving);
    }
    for (p, tp) in images.iter().enumerate() {
        for (q, tq) in images.iter().enumerate().skip(p) {
            let basis = real_basis_inner(p, q);
            let expected = Complex64::new(basis.re, s * basis.im);
            if (inner_unchecked(tp, tq) - expected).norm() > tol {
                return Ok(OpDecision::NotPreserving);
            }
        }
    }

    let s = s.clamp(-1.0, 1.0);
    let basis_data = images
        .chunks_exact(2)
        .map(|pair| {
            let eta = &pair[1] - &pair[0].scale(I * s);
            (pair[0].clone(), eta)
        })
        .collect();
    Ok(OpDecision::Preserving(OpCertificate {
        gamma: scaled.gamma,
        s,
        c: (1.0 - s * s).sqrt(),
        both_directions: s.abs() > tol,
        basis_data,
    }))
}

/// `min_x ‖v − T(x)‖`, the least-squares residual of `v` against the real
/// column space of the real form.
pub fn range_distance(t: &RealLinearMap, v: &ComplexVec) -> Result<f64> {
    if v.dim() != t.dim_k() {
        return Err(Error::Dimension(format!("vector lies in ℂ^{} but the map lands in ℂ^{}", v.dim(), t.dim_k())));
    }
    let rhs = v.real_coords();
    let svd = SVD::new(t.real_form().clone(), true, false);
    let u = svd.u.as_ref().expect("U was requested");
    let sigma_max = svd.singular_values.max();
    if sigma_max == 0.0 {
        return Ok(v.norm());
    }
    let cutoff = sigma_max * 1e-12;
    let mut projection = DVector::<f64>::zeros(rhs.len());
    for (k, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma > cutoff {
            let col = u.column(k);
            projection.axpy(col.dot(&rhs), &col, 1.0);
        }
    }
    Ok((rhs - projection).norm())
}

/// `v ∈ T(ℂ^m)` up to a relative residual of [`RANGE_MEMBERSHIP_TOL`].
pub fn is_in_range(t: &RealLinearMap, v: &ComplexVec) -> Result<bool> {
    Ok(range_distance(t, v)? <= RANGE_MEMBERSHIP_TOL * v.norm())
}

fn pointwise_tol(tol: f64) -> f64 {
    tol.max(RANGE_MEMBERSHIP_TOL)
}

/// `A(i·z) = ±i·A(z)` for one of the two signs.
fn rotates_by_plus_minus_i(a: &RealLinearMap, z: &ComplexVec, tol: f64) -> bool {
    let az = a.apply_unchecked(z);
    let aiz = a.apply_unchecked(&z.mul_i());
    let iaz = az.mul_i();
    let scale = az.norm().max(aiz.norm());
    let threshold = pointwise_tol(tol) * scale;
    (&aiz - &iaz).norm() <= threshold || (&aiz + &iaz).norm() <= threshold
}

/// Full classification. The criterion at a random point uses
/// [`CRITERIA_SEED`]; see [`classify_map_seeded`].
pub fn classify_map(a: &RealLinearMap, tol: f64) -> Result<Classification> {
    classify_map_seeded(a, tol, CRITERIA_SEED)
}

pub fn classify_map_seeded(a: &RealLinearMap, tol: f64, seed: u64) -> Result<Classification> {
    let decision = is_orthogonality_preserving(a, tol)?;
    let (class, certificate) = match decision {
        OpDecision::Zero => return Ok(Classification { class: MapClass::Zero, certificate: None, criteria: None }),
        OpDecision::NotPreserving => (MapClass::NotOrthogonalityPreserving, None),
        OpDecision::Preserving(cert) => (cert.class(tol), Some(cert)),
    };

    let e1 = ComplexVec::basis(a.dim_h(), 0)?;
    let z = nonzero_complex_gaussian(&mut seeded(seed), a.dim_h());
    let criteria = CriteriaReport {
        b: rotates_by_plus_minus_i(a, &e1, tol),
        c: rotates_by_plus_minus_i(a, &z, tol),
        d: is_in_range(a, &a.apply_unchecked(&e1).mul_i())?,
    };
    Ok(Classification { class, certificate, criteria: Some(criteria) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// Certificate `s ∈ {±1}`: complex- or conjugate-linear.
    pub a: bool,
    /// `A(i·z) ∈ {±i·A(z)}` at every one of 100 seeded points.
    pub b: bool,
    /// The same at a single seeded point.
    pub c: bool,
    /// `i·A(z) ∈ A(H)` at a seeded point.
    pub d: bool,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }
}

pub const EQUIVALENCE_POINTS: usize = 100;

/// Evaluates the four equivalent characterizations of complex- or
/// conjugate-linearity on an orthogonality-preserving map.
pub fn theorem_equivalence_check(a: &RealLinearMap, tol: f64, seed: u64) -> Result<EquivalenceReport> {
    let cert = match is_orthogonality_preserving(a, tol)? {
        OpDecision::Preserving(cert) => cert,
        OpDecision::Zero => return Err(Error::Precondition("the zero map is excluded".into())),
        OpDecision::NotPreserving => {
            return Err(Error::Precondition("the map does not preserve orthogonality".into()))
        }
    };
    let dim = a.dim_h();
    let crit_a = cert.class(tol) != MapClass::MixedType;

    let mut rng = seeded(derive_seed(seed, "criterion-b"));
    let crit_b = (0..EQUIVALENCE_POINTS).all(|_| rotates_by_plus_minus_i(a, &nonzero_complex_gaussian(&mut rng, dim), tol));

    let z = nonzero_complex_gaussian(&mut seeded(derive_seed(seed, "criterion-c")), dim);
    let crit_c = rotates_by_plus_minus_i(a, &z, tol);

    let w = nonzero_complex_gaussian(&mut seeded(derive_seed(seed, "criterion-d")), dim);
    let crit_d = is_in_range(a, &a.apply_unchecked(&w).mul_i())?;

    Ok(EquivalenceReport { a: crit_a, b: crit_b, c: crit_c, d: crit_d })
}

/// An orthogonal pair whose images are not orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub x: ComplexVec,
    pub y: ComplexVec,
    pub image_x: ComplexVec,
    pub image_y: ComplexVec,
    /// `⟨A(x)|A(y)⟩`.
    pub image_inner: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub preserving: bool,
    pub samples_checked: usize,
    pub witness: Option<Witness>,
}

/// Brute-force check of the defining property on `samples` seeded
/// orthogonal pairs; stops at the first failing pair.
pub fn sampling_oracle(a: &RealLinearMap, samples: usize, seed: u64, tol: f64) -> Result<OracleReport> {
    require_domain_dim(a)?;
    if samples == 0 {
        return Err(Error::Precondition("the oracle needs at least one sample".into()));
    }
    for (k, (x, y)) in OrthogonalPairs::new(a.dim_h(), seed)?.take(samples).enumerate() {
        let image_x = a.apply_unchecked(&x);
        let image_y = a.apply_unchecked(&y);
        if !is_orthogonal(&image_x, &image_y, tol)? {
            let image_inner = inner_unchecked(&image_x, &image_y);
            return Ok(OracleReport {
                preserving: false,
                samples_checked: k + 1,
                witness: Some(Witness { x, y, image_x, image_y, image_inner }),
            });
        }
    }
    Ok(OracleReport { preserving: true, samples_checked: samples, witness: None })
}

/// A certificate for a map `ℂ^m → ℂ^n` with `n < 2m` must have `|s| = 1`.
pub fn dimension_bound_check(m: usize, n: usize, certificate: &OpCertificate, tol: f64) -> bool {
    n >= 2 * m || 1.0 - certificate.s.abs() <= tol
}

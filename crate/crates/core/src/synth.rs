//! Constructions: canonical orthogonality-preserving isometries, the
//! corrector map, a gallery of named test maps and seeded generators.
//!
//! The canonical isometry is fixed on the real basis `{e_j, i·e_j}` by
//!
//! ```text
//! T(e_j)   = k_j
//! T(i·e_j) = i·s·k_j + σ_j·c·k̃_j          (c = √(1 − s²))
//! ```
//!
//! for an orthonormal basis `{e_j}` of the domain and an orthonormal
//! system `{k_j} ∪ {k̃_j}` in the codomain. It is complex-linear for
//! `s = 1`, conjugate-linear for `s = −1` and mixed otherwise.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

use crate::classify::{is_orthogonality_preserving, MapClass, OpDecision};
use crate::error::{Error, Result};
use crate::linalg::{extend_to_unitary, orthonormality_defect, orthonormalize_columns};
use crate::map::RealLinearMap;
use crate::random::{complex_gaussian, complex_gaussian_matrix, real_gaussian_matrix, seeded};
use crate::space::{ComplexVec, I};

/// Orthonormality tolerance for the bases of a [`CanonicalSpec`].
pub const ORTHONORMAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalSpec {
    s: f64,
    sigma: Vec<i8>,
    domain_basis: DMatrix<Complex64>,
    k: DMatrix<Complex64>,
    k_tilde: Option<DMatrix<Complex64>>,
}

impl CanonicalSpec {
    /// `domain_basis` is a unitary `m × m` matrix whose columns are the
    /// `e_j`; `k` and `k_tilde` are `n × m` with columns `k_j` and `k̃_j`.
    /// `k_tilde` is required exactly when `|s| < 1`.
    pub fn new(
        s: f64,
        sigma: Vec<i8>,
        domain_basis: DMatrix<Complex64>,
        k: DMatrix<Complex64>,
        k_tilde: Option<DMatrix<Complex64>>,
    ) -> Result<Self> {
        let m = domain_basis.ncols();
        let n = k.nrows();
        if m < 2 {
            return Err(Error::Spec(format!("domain dimension must be at least 2, got {m}")));
        }
        if !(s.is_finite() && s.abs() <= 1.0) {
            return Err(Error::Spec(format!("s must lie in [-1, 1], got {s}")));
        }
        if sigma.len() != m || sigma.iter().any(|&x| x != 1 && x != -1) {
            return Err(Error::Spec(format!("sigma must be {m} signs ±1, got {sigma:?}")));
        }
        if domain_basis.nrows() != m || orthonormality_defect(&domain_basis) > ORTHONORMAL_TOL {
            return Err(Error::Spec("domain basis is not a unitary square matrix".into()));
        }
        if k.ncols() != m {
            return Err(Error::Spec(format!("expected {m} vectors k_j, got {}", k.ncols())));
        }
        let pure = s.abs() == 1.0;
        if pure && n < m {
            return Err(Error::Spec(format!("a pure isometry from ℂ^{m} needs codomain dimension ≥ {m}, got {n}")));
        }
        if !pure && n < 2 * m {
            return Err(Error::InsufficientCodomain { dim_h: m, dim_k: n });
        }

        let system = match (&k_tilde, pure) {
            (_, true) => k.clone(),
            (Some(kt), false) => {
                if kt.shape() != (n, m) {
                    return Err(Error::Spec(format!("k̃ must be {n}×{m}, got {:?}", kt.shape())));
                }
                let mut both = DMatrix::zeros(n, 2 * m);
                both.columns_mut(0, m).copy_from(&k);
                both.columns_mut(m, m).copy_from(kt);
                both
            }
            (None, false) => return Err(Error::Spec("|s| < 1 requires the vectors k̃_j".into())),
        };
        if orthonormality_defect(&system) > ORTHONORMAL_TOL {
            return Err(Error::Spec("the codomain system is not orthonormal".into()));
        }

        Ok(Self { s, sigma, domain_basis, k, k_tilde: if pure { None } else { k_tilde } })
    }

    /// Standard bases: `e_j` and `k_j` are the first standard vectors,
    /// `k̃_j = e_{m+j}` in the codomain.
    pub fn standard(m: usize, n: usize, s: f64, sigma: Vec<i8>) -> Result<Self> {
        if s.abs() < 1.0 && n < 2 * m {
            return Err(Error::InsufficientCodomain { dim_h: m, dim_k: n });
        }
        let column = |j: usize| {
            let mut v = DVector::<Complex64>::zeros(n);
            if j < n {
                v[j] = Complex64::new(1.0, 0.0);
            }
            v
        };
        let k = DMatrix::from_columns(&(0..m).map(column).collect::<Vec<_>>());
        let k_tilde = (s.abs() < 1.0).then(|| DMatrix::from_columns(&(m..2 * m).map(column).collect::<Vec<_>>()));
        Self::new(s, sigma, DMatrix::identity(m, m), k, k_tilde)
    }

    /// Random orthonormal bases drawn by orthonormalizing seeded Gaussian
    /// matrices.
    pub fn random(m: usize, n: usize, s: f64, sigma: Vec<i8>, seed: u64) -> Result<Self> {
        if s.abs() < 1.0 && n < 2 * m {
            return Err(Error::InsufficientCodomain { dim_h: m, dim_k: n });
        }
        let pure = s.abs() == 1.0;
        if m < 2 || (pure && n < m) {
            return Err(Error::Spec(format!("cannot build a canonical map ℂ^{m} → ℂ^{n}")));
        }
        let mut rng = seeded(seed);
        let domain = orthonormalize_columns(&complex_gaussian_matrix(&mut rng, m, m))?;
        let width = if pure { m } else { 2 * m };
        let system = orthonormalize_columns(&complex_gaussian_matrix(&mut rng, n, width))?;
        let k = system.columns(0, m).into_owned();
        let k_tilde = (!pure).then(|| system.columns(m, m).into_owned());
        Self::new(s, sigma, domain, k, k_tilde)
    }

    pub fn m(&self) -> usize {
        self.domain_basis.ncols()
    }

    pub fn n(&self) -> usize {
        self.k.nrows()
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn c(&self) -> f64 {
        (1.0 - self.s * self.s).max(0.0).sqrt()
    }

    pub fn sigma(&self) -> &[i8] {
        &self.sigma
    }

    pub fn k(&self) -> &DMatrix<Complex64> {
        &self.k
    }

    pub fn k_tilde(&self) -> Option<&DMatrix<Complex64>> {
        self.k_tilde.as_ref()
    }

    /// The same map with `σ_j` flipped and `k̃_j` negated.
    pub fn with_sign_absorbed(&self, j: usize) -> Self {
        let mut out = self.clone();
        out.sigma[j] = -out.sigma[j];
        if let Some(kt) = out.k_tilde.as_mut() {
            kt.column_mut(j).neg_mut();
        }
        out
    }
}

fn coords(v: &DVector<Complex64>) -> DVector<f64> {
    ComplexVec::from_dvector(v.clone()).real_coords()
}

/// Real matrix `Σ out_p·in_pᵀ` for pairs of complex vectors.
fn outer_sum(rows: usize, cols: usize, pairs: &[(DVector<Complex64>, DVector<Complex64>)]) -> DMatrix<f64> {
    let mut real = DMatrix::zeros(2 * rows, 2 * cols);
    for (input, output) in pairs {
        real += coords(output) * coords(input).transpose();
    }
    real
}

/// The canonical isometry described by `spec`.
pub fn synth_canonical(spec: &CanonicalSpec) -> Result<RealLinearMap> {
    let (m, n, s, c) = (spec.m(), spec.n(), spec.s(), spec.c());
    let mut pairs = Vec::with_capacity(2 * m);
    for j in 0..m {
        let e = spec.domain_basis.column(j).into_owned();
        let k = spec.k.column(j).into_owned();
        let mut image_of_ie = &k * (I * s);
        if let Some(kt) = &spec.k_tilde {
            image_of_ie += kt.column(j) * Complex64::new(f64::from(spec.sigma[j]) * c, 0.0);
        }
        pairs.push((e.clone(), k));
        pairs.push((e * I, image_of_ie));
    }
    RealLinearMap::from_real_form(outer_sum(n, m, &pairs))
}

/// `(α, β) ↦ (conj α, β)`: a real-linear isometry of `ℂ²` that is neither
/// complex- nor conjugate-linear and does not preserve orthogonality.
pub fn paper_counterexample() -> RealLinearMap {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    RealLinearMap::new(
        DMatrix::from_row_slice(2, 2, &[zero, zero, zero, one]),
        DMatrix::from_row_slice(2, 2, &[one, zero, zero, zero]),
    )
    .expect("valid 2×2 parts")
}

/// A real-linear map `R` on the codomain such that `R∘T` is a
/// complex-linear isometry.
///
/// * complex-linear `T`: `R` is the identity;
/// * conjugate-linear `T`: `R` conjugates coordinates in an orthonormal
///   basis extending `{T(e_j)}`;
/// * mixed `T`: `R(T e_j) = T e_j`, `R(i·T e_j) = i·s·T e_j`,
///   `R(η̂_j) = i·c·T e_j`, and `R` vanishes on `i·η̂_j` and on the real
///   orthogonal complement of those vectors.
pub fn build_corrector(t: &RealLinearMap, tol: f64) -> Result<RealLinearMap> {
    let cert = match is_orthogonality_preserving(t, tol)? {
        OpDecision::Preserving(cert) => cert,
        _ => return Err(Error::Precondition("the corrector needs an orthogonality-preserving map".into())),
    };
    if (cert.gamma - 1.0).abs() > tol {
        return Err(Error::Precondition(format!("the corrector needs an isometry, got γ = {}", cert.gamma)));
    }
    let n = t.dim_k();
    match cert.class(tol) {
        MapClass::ComplexLinear => RealLinearMap::identity(n),
        MapClass::ConjugateLinear => {
            let images: Vec<DVector<Complex64>> =
                cert.basis_data.iter().map(|(k, _)| k.as_dvector().clone()).collect();
            let basis = extend_to_unitary(&orthonormalize_columns(&DMatrix::from_columns(&images))?)?;
            // y ↦ F·conj(Fᴴ·y) = (F·Fᵀ)·conj(y)
            RealLinearMap::new(DMatrix::zeros(n, n), &basis * basis.transpose())
        }
        _ => {
            let (s, c) = (cert.s, cert.c);
            let mut pairs = Vec::with_capacity(3 * cert.basis_data.len());
            for (k, eta) in &cert.basis_data {
                let k = k.as_dvector().clone();
                let eta_hat = eta.as_dvector() / Complex64::new(eta.norm(), 0.0);
                pairs.push((k.clone(), k.clone()));
                pairs.push((&k * I, &k * (I * s)));
                pairs.push((eta_hat, &k * (I * c)));
            }
            RealLinearMap::from_real_form(outer_sum(n, n, &pairs))
        }
    }
}

/// Worst relative deviations of `q` from a complex-linear isometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectorResiduals {
    /// `max ‖Q(ix) − i·Q(x)‖ / ‖x‖`.
    pub complex_linearity: f64,
    /// `max |‖Qx‖ − ‖x‖| / ‖x‖`.
    pub isometry: f64,
    pub samples: usize,
}

pub fn corrector_residuals(q: &RealLinearMap, samples: usize, seed: u64) -> CorrectorResiduals {
    let mut rng = seeded(seed);
    let mut out = CorrectorResiduals { complex_linearity: 0.0, isometry: 0.0, samples };
    for _ in 0..samples {
        let x = crate::random::nonzero_complex_gaussian(&mut rng, q.dim_h());
        let qx = q.apply_unchecked(&x);
        let qix = q.apply_unchecked(&x.mul_i());
        let norm = x.norm();
        out.complex_linearity = out.complex_linearity.max((&qix - &qx.mul_i()).norm() / norm);
        out.isometry = out.isometry.max((qx.norm() - norm).abs() / norm);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub map: RealLinearMap,
    pub expected: MapClass,
}

fn canonical_standard(m: usize, n: usize, s: f64) -> RealLinearMap {
    synth_canonical(&CanonicalSpec::standard(m, n, s, vec![1; m]).expect("valid gallery spec"))
        .expect("valid gallery spec")
}

/// Named maps with their expected classification.
pub fn gallery() -> Vec<GalleryEntry> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let non_isometry = RealLinearMap::new(
        DMatrix::from_row_slice(2, 2, &[one, zero, zero, zero]),
        DMatrix::zeros(2, 2),
    )
    .expect("valid parts");

    vec![
        GalleryEntry { name: "identity", map: RealLinearMap::identity(2).unwrap(), expected: MapClass::ComplexLinear },
        GalleryEntry {
            name: "conjugation",
            map: RealLinearMap::conjugation(2).unwrap(),
            expected: MapClass::ConjugateLinear,
        },
        GalleryEntry {
            name: "paper_counterexample",
            map: paper_counterexample(),
            expected: MapClass::NotOrthogonalityPreserving,
        },
        GalleryEntry { name: "mixed_2_4_s06", map: canonical_standard(2, 4, 0.6), expected: MapClass::MixedType },
        GalleryEntry { name: "mixed_2_4_s0", map: canonical_standard(2, 4, 0.0), expected: MapClass::MixedType },
        GalleryEntry { name: "mixed_3_6_sm08", map: canonical_standard(3, 6, -0.8), expected: MapClass::MixedType },
        GalleryEntry {
            name: "scaled_mixed_2_4_s06",
            map: canonical_standard(2, 4, 0.6).scale(2.5),
            expected: MapClass::MixedType,
        },
        GalleryEntry { name: "non_isometry", map: non_isometry, expected: MapClass::NotOrthogonalityPreserving },
        GalleryEntry { name: "zero", map: RealLinearMap::zero(2, 2).unwrap(), expected: MapClass::Zero },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    PureLinear,
    PureConjugate,
    Mixed,
}

/// A random orthogonality-preserving isometry `ℂ^m → ℂ^n` of the given
/// kind; mixed maps draw `s` uniformly from `[−0.95, 0.95]`.
pub fn random_op_map(m: usize, n: usize, kind: OpKind, seed: u64) -> Result<RealLinearMap> {
    if m < 2 {
        return Err(Error::Dimension(format!("domain dimension must be at least 2, got {m}")));
    }
    match kind {
        OpKind::Mixed if n < 2 * m => return Err(Error::InsufficientCodomain { dim_h: m, dim_k: n }),
        _ if n < m => return Err(Error::Dimension(format!("cannot embed ℂ^{m} isometrically in ℂ^{n}"))),
        _ => {}
    }
    let mut rng = seeded(seed);
    let s = match kind {
        OpKind::PureLinear => 1.0,
        OpKind::PureConjugate => -1.0,
        OpKind::Mixed => rng.random_range(-0.95..=0.95),
    };
    let sigma = (0..m).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect();
    synth_canonical(&CanonicalSpec::random(m, n, s, sigma, rng.random())?)
}

/// A random real-linear isometry `ℂ^m → ℂ^n` (orthonormal real columns).
/// Needs `n ≥ m`; generically it does not preserve orthogonality.
pub fn random_real_isometry(m: usize, n: usize, seed: u64) -> Result<RealLinearMap> {
    if n < m || m == 0 {
        return Err(Error::Dimension(format!("no real isometry ℂ^{m} → ℂ^{n}")));
    }
    let gaussian = real_gaussian_matrix(&mut seeded(seed), 2 * n, 2 * m);
    let q = gaussian.qr().q();
    RealLinearMap::from_real_form(q)
}

/// A random vector of `ℂ^dim`, convenient for examples.
pub fn random_point(dim: usize, seed: u64) -> ComplexVec {
    complex_gaussian(&mut seeded(seed), dim)
}

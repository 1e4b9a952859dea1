//! Vectors of `ℂ^m` and the Euclidean inner product.
//!
//! The inner product is linear in the first slot and conjugate-linear in
//! the second: `⟨x|y⟩ = Σ x_j · conj(y_j)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// The imaginary unit.
pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// An element of `ℂ^m` with `m ≥ 1`.
#[derive(Clone, PartialEq)]
pub struct ComplexVec(DVector<Complex64>);

impl ComplexVec {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Dimension("vectors must have at least one entry".into()));
        }
        Ok(Self(DVector::from_vec(entries)))
    }

    /// Builds a vector from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); dim])
    }

    /// The `j`-th standard basis vector of `ℂ^dim`.
    pub fn basis(dim: usize, j: usize) -> Result<Self> {
        if j >= dim {
            return Err(Error::Dimension(format!("basis index {j} out of range for ℂ^{dim}")));
        }
        let mut v = Self::zeros(dim)?;
        v.0[j] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    /// Inverse of [`ComplexVec::real_coords`]; the slice is read as
    /// `(Re z₁, Im z₁, …, Re z_m, Im z_m)`.
    pub fn from_real_coords(coords: &[f64]) -> Result<Self> {
        if coords.len() % 2 != 0 {
            return Err(Error::Format(format!("odd number of real coordinates ({})", coords.len())));
        }
        Self::new(coords.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect())
    }

    pub(crate) fn from_dvector(v: DVector<Complex64>) -> Self {
        debug_assert!(!v.is_empty());
        Self(v)
    }

    /// Interleaved real coordinates.
    pub fn real_coords(&self) -> DVector<f64> {
        DVector::from_iterator(2 * self.dim(), self.0.iter().flat_map(|z| [z.re, z.im]))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        self.0.as_slice()
    }

    pub fn as_dvector(&self) -> &DVector<Complex64> {
        &self.0
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self(self.0.map(|z| z * factor))
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        Self(self.0.map(|z| z * factor))
    }

    /// Multiplication by the imaginary unit.
    pub fn mul_i(&self) -> Self {
        self.scale(I)
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0.iter().zip(other.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!("ℂ^{} vs ℂ^{}", self.dim(), other.dim())));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self(&self.0 + &other.0))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self(&self.0 - &other.0))
    }
}

/// `⟨x|y⟩ = Σ x_j · conj(y_j)`.
pub fn inner(x: &ComplexVec, y: &ComplexVec) -> Result<Complex64> {
    x.check_same_dim(y)?;
    Ok(inner_unchecked(x, y))
}

pub(crate) fn inner_unchecked(x: &ComplexVec, y: &ComplexVec) -> Complex64 {
    x.0.iter().zip(y.0.iter()).map(|(a, b)| a * b.conj()).sum()
}

// The operator impls panic on mismatched dimensions; use the `checked_*`
// methods on untrusted input.
impl Add for &ComplexVec {
    type Output = ComplexVec;

    fn add(self, rhs: Self) -> ComplexVec {
        self.checked_add(rhs).expect("dimension mismatch in vector addition")
    }
}

impl Sub for &ComplexVec {
    type Output = ComplexVec;

    fn sub(self, rhs: Self) -> ComplexVec {
        self.checked_sub(rhs).expect("dimension mismatch in vector subtraction")
    }
}

impl Neg for &ComplexVec {
    type Output = ComplexVec;

    fn neg(self) -> ComplexVec {
        ComplexVec(-&self.0)
    }
}

impl fmt::Debug for ComplexVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

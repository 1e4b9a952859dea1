//! Real-linear maps `ℂ^m → ℂ^n`.
//!
//! Every real-linear map splits uniquely as `A(x) = C·x + D·conj(x)` with
//! `C` complex-linear and `D` anti-linear. A [`RealLinearMap`] keeps that
//! splitting together with the `2n × 2m` real matrix acting on interleaved
//! coordinates `(Re z₁, Im z₁, …)`. Whichever representation the map was
//! built from is stored verbatim; the other one is derived from it.
//! Evaluation always goes through the real matrix, so a map rebuilt from
//! its own real form evaluates bit-for-bit identically.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::space::ComplexVec;

#[derive(Clone, Debug, PartialEq)]
pub struct RealLinearMap {
    real: DMatrix<f64>,
    linear: DMatrix<Complex64>,
    antilinear: DMatrix<Complex64>,
}

impl RealLinearMap {
    /// Builds `x ↦ linear·x + antilinear·conj(x)` from two `n × m` matrices.
    pub fn new(linear: DMatrix<Complex64>, antilinear: DMatrix<Complex64>) -> Result<Self> {
        if linear.shape() != antilinear.shape() {
            return Err(Error::Dimension(format!(
                "linear part is {:?} but antilinear part is {:?}",
                linear.shape(),
                antilinear.shape()
            )));
        }
        let (n, m) = linear.shape();
        if n == 0 || m == 0 {
            return Err(Error::Dimension("zero-dimensional spaces are not supported".into()));
        }
        if !linear.iter().chain(antilinear.iter()).all(|z| z.is_finite()) {
            return Err(Error::Format("matrix entries must be finite".into()));
        }

        let mut real = DMatrix::zeros(2 * n, 2 * m);
        for k in 0..n {
            for j in 0..m {
                let c = linear[(k, j)];
                let d = antilinear[(k, j)];
                real[(2 * k, 2 * j)] = c.re + d.re;
                real[(2 * k, 2 * j + 1)] = -c.im + d.im;
                real[(2 * k + 1, 2 * j)] = c.im + d.im;
                real[(2 * k + 1, 2 * j + 1)] = c.re - d.re;
            }
        }
        if !real.iter().all(|v| v.is_finite()) {
            return Err(Error::Format("real form overflows".into()));
        }
        Ok(Self { real, linear, antilinear })
    }

    /// Reads a `2n × 2m` real matrix acting on interleaved coordinates.
    pub fn from_real_form(real: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = real.shape();
        if rows % 2 != 0 || cols % 2 != 0 {
            return Err(Error::Format(format!("real form must have even dimensions, got {rows}×{cols}")));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension("zero-dimensional spaces are not supported".into()));
        }
        if !real.iter().all(|v| v.is_finite()) {
            return Err(Error::Format("matrix entries must be finite".into()));
        }

        let (n, m) = (rows / 2, cols / 2);
        let mut linear = DMatrix::zeros(n, m);
        let mut antilinear = DMatrix::zeros(n, m);
        for k in 0..n {
            for j in 0..m {
                let b11 = real[(2 * k, 2 * j)];
                let b12 = real[(2 * k, 2 * j + 1)];
                let b21 = real[(2 * k + 1, 2 * j)];
                let b22 = real[(2 * k + 1, 2 * j + 1)];
                linear[(k, j)] = Complex64::new(0.5 * (b11 + b22), 0.5 * (b21 - b12));
                antilinear[(k, j)] = Complex64::new(0.5 * (b11 - b22), 0.5 * (b21 + b12));
            }
        }
        if !linear.iter().chain(antilinear.iter()).all(|z| z.is_finite()) {
            return Err(Error::Format("complex parts overflow".into()));
        }
        Ok(Self { real, linear, antilinear })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(DMatrix::identity(dim, dim), DMatrix::zeros(dim, dim))
    }

    /// Entrywise complex conjugation on `ℂ^dim`.
    pub fn conjugation(dim: usize) -> Result<Self> {
        Self::new(DMatrix::zeros(dim, dim), DMatrix::identity(dim, dim))
    }

    pub fn zero(dim_h: usize, dim_k: usize) -> Result<Self> {
        Self::new(DMatrix::zeros(dim_k, dim_h), DMatrix::zeros(dim_k, dim_h))
    }

    pub fn dim_h(&self) -> usize {
        self.linear.ncols()
    }

    pub fn dim_k(&self) -> usize {
        self.linear.nrows()
    }

    pub fn linear_part(&self) -> &DMatrix<Complex64> {
        &self.linear
    }

    pub fn antilinear_part(&self) -> &DMatrix<Complex64> {
        &self.antilinear
    }

    pub fn real_form(&self) -> &DMatrix<f64> {
        &self.real
    }

    pub fn apply(&self, x: &ComplexVec) -> Result<ComplexVec> {
        if x.dim() != self.dim_h() {
            return Err(Error::Dimension(format!(
                "map is defined on ℂ^{} but the vector lies in ℂ^{}",
                self.dim_h(),
                x.dim()
            )));
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &ComplexVec) -> ComplexVec {
        let image = &self.real * x.real_coords();
        ComplexVec::from_real_coords(image.as_slice()).expect("real form has even row count")
    }

    /// Image of the `p`-th vector of the real basis `e₁, i·e₁, e₂, i·e₂, …`,
    /// i.e. the `p`-th column of the real form.
    pub fn real_basis_image(&self, p: usize) -> ComplexVec {
        ComplexVec::from_real_coords(self.real.column(p).as_slice()).expect("even row count")
    }

    /// `r · A` for a real scalar `r`.
    pub fn scale(&self, r: f64) -> Self {
        Self::from_real_form(&self.real * r).expect("scaling keeps the real form valid")
    }

    /// The composition `self ∘ first`.
    pub fn compose(&self, first: &RealLinearMap) -> Result<Self> {
        if first.dim_k() != self.dim_h() {
            return Err(Error::Dimension(format!(
                "cannot compose ℂ^{} → ℂ^{} after a map into ℂ^{}",
                self.dim_h(),
                self.dim_k(),
                first.dim_k()
            )));
        }
        Self::from_real_form(&self.real * &first.real)
    }

    pub fn is_zero(&self) -> bool {
        self.real.iter().all(|&v| v == 0.0)
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.real.amax()
    }

    /// `antilinear_part ≈ 0`, relative to the size of the map.
    pub fn is_complex_linear(&self, tol: f64) -> bool {
        self.antilinear.iter().all(|z| z.norm() <= tol * self.max_abs_entry().max(1.0))
    }

    /// `linear_part ≈ 0`, relative to the size of the map.
    pub fn is_conjugate_linear(&self, tol: f64) -> bool {
        self.linear.iter().all(|z| z.norm() <= tol * self.max_abs_entry().max(1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dmatrix;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn scalar_map(lin: Complex64, anti: Complex64) -> RealLinearMap {
        RealLinearMap::new(dmatrix![lin], dmatrix![anti]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let x = ComplexVec::new(vec![c(1.0, 1.0), c(0.0, 0.0)]).unwrap();
        let id = RealLinearMap::identity(2).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);

        let conj = RealLinearMap::conjugation(2).unwrap();
        assert_eq!(conj.apply(&x).unwrap(), ComplexVec::new(vec![c(1.0, -1.0), c(0.0, 0.0)]).unwrap());

        // (α, β) ↦ (conj α, β)
        let zero = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        let t = RealLinearMap::new(dmatrix![zero, zero; zero, one], dmatrix![one, zero; zero, zero]).unwrap();
        let x = ComplexVec::new(vec![c(0.0, 1.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(t.apply(&x).unwrap(), ComplexVec::new(vec![c(0.0, -1.0), c(0.0, 1.0)]).unwrap());
    }

    #[test]
    fn apply_rejects_wrong_dimension() {
        let id = RealLinearMap::identity(2).unwrap();
        let x = ComplexVec::zeros(3).unwrap();
        assert!(matches!(id.apply(&x), Err(Error::Dimension(_))));
    }

    #[test]
    fn real_form_examples() {
        assert_eq!(scalar_map(c(1.0, 0.0), c(0.0, 0.0)).real_form(), &dmatrix![1.0, 0.0; 0.0, 1.0]);
        assert_eq!(scalar_map(c(0.0, 0.0), c(1.0, 0.0)).real_form(), &dmatrix![1.0, 0.0; 0.0, -1.0]);
        assert_eq!(scalar_map(c(0.0, 1.0), c(0.0, 0.0)).real_form(), &dmatrix![0.0, -1.0; 1.0, 0.0]);
    }

    #[test]
    fn from_real_form_examples() {
        let id = RealLinearMap::from_real_form(dmatrix![1.0, 0.0; 0.0, 1.0]).unwrap();
        assert_eq!(id.linear_part(), &dmatrix![c(1.0, 0.0)]);
        assert_eq!(id.antilinear_part(), &dmatrix![c(0.0, 0.0)]);

        let conj = RealLinearMap::from_real_form(dmatrix![1.0, 0.0; 0.0, -1.0]).unwrap();
        assert_eq!(conj.linear_part(), &dmatrix![c(0.0, 0.0)]);
        assert_eq!(conj.antilinear_part(), &dmatrix![c(1.0, 0.0)]);

        let rot = RealLinearMap::from_real_form(dmatrix![0.0, -1.0; 1.0, 0.0]).unwrap();
        assert_eq!(rot.linear_part(), &dmatrix![c(0.0, 1.0)]);
        assert_eq!(rot.antilinear_part(), &dmatrix![c(0.0, 0.0)]);
    }

    #[test]
    fn from_real_form_rejects_odd_shapes() {
        let odd = DMatrix::<f64>::zeros(3, 2);
        assert!(matches!(RealLinearMap::from_real_form(odd), Err(Error::Format(_))));
        let empty = DMatrix::<f64>::zeros(0, 2);
        assert!(matches!(RealLinearMap::from_real_form(empty), Err(Error::Dimension(_))));
    }

    #[test]
    fn mismatched_parts_rejected() {
        let a = DMatrix::<Complex64>::zeros(2, 2);
        let b = DMatrix::<Complex64>::zeros(2, 3);
        assert!(matches!(RealLinearMap::new(a, b), Err(Error::Dimension(_))));
    }

    #[test]
    fn linearity_flags() {
        assert!(RealLinearMap::identity(2).unwrap().is_complex_linear(1e-12));
        assert!(!RealLinearMap::identity(2).unwrap().is_conjugate_linear(1e-12));
        assert!(RealLinearMap::conjugation(2).unwrap().is_conjugate_linear(1e-12));
    }

    fn arb_parts(n: usize, m: usize) -> impl Strategy<Value = (DMatrix<Complex64>, DMatrix<Complex64>)> {
        let entries = proptest::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 2 * n * m);
        entries.prop_map(move |e| {
            let z: Vec<Complex64> = e.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            (
                DMatrix::from_column_slice(n, m, &z[..n * m]),
                DMatrix::from_column_slice(n, m, &z[n * m..]),
            )
        })
    }

    fn arb_vec(m: usize) -> impl Strategy<Value = ComplexVec> {
        proptest::collection::vec((-3.0..3.0f64, -3.0..3.0f64), m)
            .prop_map(|p| ComplexVec::from_pairs(&p).unwrap())
    }

    proptest! {
        #[test]
        fn real_form_round_trip_is_exact((lin, anti) in arb_parts(3, 2), x in arb_vec(2)) {
            let a = RealLinearMap::new(lin, anti).unwrap();
            let b = RealLinearMap::from_real_form(a.real_form().clone()).unwrap();
            prop_assert_eq!(b.real_form(), a.real_form());
            prop_assert_eq!(b.apply(&x).unwrap(), a.apply(&x).unwrap());
        }

        #[test]
        fn real_form_matches_complex_action((lin, anti) in arb_parts(2, 3), x in arb_vec(3)) {
            let direct = &lin * x.as_dvector() + &anti * x.conj().as_dvector();
            let a = RealLinearMap::new(lin, anti).unwrap();
            let via_real = a.apply(&x).unwrap();
            let direct = ComplexVec::from_dvector(direct);
            prop_assert!(via_real.max_abs_diff(&direct) <= 1e-12);
        }

        #[test]
        fn parts_recovered_from_real_form((lin, anti) in arb_parts(2, 2)) {
            let a = RealLinearMap::new(lin.clone(), anti.clone()).unwrap();
            let b = RealLinearMap::from_real_form(a.real_form().clone()).unwrap();
            prop_assert!((b.linear_part() - lin).camax() <= 1e-14);
            prop_assert!((b.antilinear_part() - anti).camax() <= 1e-14);
        }

        #[test]
        fn additive_and_real_homogeneous(
            (lin, anti) in arb_parts(2, 2), x in arb_vec(2), y in arb_vec(2), r in -4.0..4.0f64,
        ) {
            let a = RealLinearMap::new(lin, anti).unwrap();
            let sum = a.apply(&(&x + &y)).unwrap();
            let split = &a.apply(&x).unwrap() + &a.apply(&y).unwrap();
            prop_assert!(sum.max_abs_diff(&split) <= 1e-12);
            let scaled = a.apply(&x.scale_real(r)).unwrap();
            prop_assert!(scaled.max_abs_diff(&a.apply(&x).unwrap().scale_real(r)) <= 1e-12);
        }
    }
}

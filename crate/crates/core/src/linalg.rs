//! Orthonormalization helpers for complex column systems.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const REORTH_THRESHOLD: f64 = 1e-12;

/// `max |QᴴQ − I|` over all entries.
pub fn orthonormality_defect(q: &DMatrix<Complex64>) -> f64 {
    let gram = q.adjoint() * q;
    let k = gram.nrows();
    (0..k)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .map(|(a, b)| {
            let target = if a == b { 1.0 } else { 0.0 };
            (gram[(a, b)] - Complex64::new(target, 0.0)).norm()
        })
        .fold(0.0, f64::max)
}

fn gram_schmidt_pass(cols: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let mut q = cols.clone();
    for j in 0..q.ncols() {
        let scale = cols.column(j).norm().max(f64::MIN_POSITIVE);
        for p in 0..j {
            let proj = q.column(p).dotc(&q.column(j));
            let qp = q.column(p).clone_owned();
            q.column_mut(j).axpy(-proj, &qp, Complex64::new(1.0, 0.0));
        }
        let norm = q.column(j).norm();
        if norm <= 1e-10 * scale {
            return Err(Error::Degenerate(format!("column {j} is linearly dependent on the previous ones")));
        }
        q.column_mut(j).unscale_mut(norm);
    }
    Ok(q)
}

/// Modified Gram–Schmidt over the columns; a second pass runs whenever the
/// first leaves a defect above `1e-12`.
pub fn orthonormalize_columns(cols: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let mut q = gram_schmidt_pass(cols)?;
    for _ in 0..2 {
        if orthonormality_defect(&q) <= REORTH_THRESHOLD {
            break;
        }
        q = gram_schmidt_pass(&q)?;
    }
    Ok(q)
}

/// Extends orthonormal columns `n × k` to a unitary `n × n` matrix whose
/// first `k` columns are the input.
pub fn extend_to_unitary(cols: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let (n, k) = cols.shape();
    let mut basis: Vec<nalgebra::DVector<Complex64>> = cols.column_iter().map(|c| c.clone_owned()).collect();
    for e in 0..n {
        if basis.len() == n {
            break;
        }
        let mut v = nalgebra::DVector::<Complex64>::zeros(n);
        v[e] = Complex64::new(1.0, 0.0);
        for _ in 0..2 {
            for b in &basis {
                let proj = b.dotc(&v);
                v.axpy(-proj, b, Complex64::new(1.0, 0.0));
            }
        }
        let norm = v.norm();
        // Skipped vectors have residual² < 1/(4n) in total less than one
        // missing dimension, so the basis always completes.
        if norm > 0.5 / (n as f64).sqrt() {
            basis.push(v.unscale(norm));
        }
    }
    if basis.len() != n {
        return Err(Error::Degenerate(format!("could not extend {k} columns to a basis of ℂ^{n}")));
    }
    Ok(DMatrix::from_columns(&basis))
}

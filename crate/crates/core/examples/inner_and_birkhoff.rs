//! Inner products, ordinary orthogonality and the Birkhoff-James minimum.

use orthopreserve::ortho::is_birkhoff_orthogonal;
use orthopreserve::{birkhoff_min, inner, is_orthogonal, project_orthogonal, sample_orthogonal_pairs, ComplexVec};

fn main() -> orthopreserve::Result<()> {
    let x = ComplexVec::from_pairs(&[(1.0, 0.0), (0.0, 1.0)])?;
    let y = ComplexVec::from_pairs(&[(0.0, 1.0), (1.0, 0.0)])?;
    println!("<x|y> = {}", inner(&x, &y)?);
    println!("x ⟂ y: {}", is_orthogonal(&x, &y, 1e-12)?);

    let z = ComplexVec::from_pairs(&[(1.0, 0.0), (1.0, 1.0)])?;
    println!("x ⟂ z: {}", is_orthogonal(&x, &z, 1e-12)?);
    let bm = birkhoff_min(&x, &z)?;
    println!("min ||x + a y|| = {:.6} at a = {:.6}", bm.min_value, bm.alpha);
    println!("x ⟂_BJ y: {}  x ⟂_BJ z: {}", is_birkhoff_orthogonal(&x, &y, 1e-12)?, is_birkhoff_orthogonal(&x, &z, 1e-12)?);

    let w = project_orthogonal(&x, &y)?;
    println!("after projection: <w|y> = {:.2e}", inner(&w, &y)?.norm());

    for (i, (a, b)) in sample_orthogonal_pairs(3, 3, 7)?.iter().enumerate() {
        println!("sample {i}: |<a|b>| = {:.2e}", inner(a, b)?.norm());
    }
    Ok(())
}

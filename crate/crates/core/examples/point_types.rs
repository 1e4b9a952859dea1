//! Per-point profile T(iz) = i s T(z) + η for pure and mixed isometries.

use orthopreserve::synth::random_point;
use orthopreserve::typing::check_orthogonal_propagation;
use orthopreserve::{classify_point, random_op_map, type_profile, ComplexVec, OpKind};

fn main() -> orthopreserve::Result<()> {
    let tol = 1e-9;
    for (label, kind) in [("linear", OpKind::PureLinear), ("conjugate", OpKind::PureConjugate), ("mixed", OpKind::Mixed)] {
        let t = random_op_map(2, 4, kind, 5)?;
        let z = random_point(2, 9);
        let p = type_profile(&t, &z, tol)?;
        println!("{label:>9}: s = {:+.6}  |η| = {:.6}  type = {:?}", p.s, p.eta_norm, classify_point(&p, tol));
    }

    let t = random_op_map(2, 4, OpKind::Mixed, 5)?;
    let u = ComplexVec::basis(2, 0)?;
    let v = ComplexVec::basis(2, 1)?;
    let report = check_orthogonal_propagation(&t, &u, &v, tol)?;
    println!("orthogonal points share s and |η|: {}", report.all_hold());
    Ok(())
}

//! Factor an orthogonality-preserving map as γ times a real isometry.

use orthopreserve::{gallery, is_real_isometry, random_op_map, wojcik_decompose, OpKind};

fn main() -> orthopreserve::Result<()> {
    let a = random_op_map(3, 6, OpKind::Mixed, 11)?.scale(2.5);
    let d = wojcik_decompose(&a, 1e-9)?;
    println!("gamma = {:.12}", d.gamma);
    println!("T is an isometry: {}", is_real_isometry(&d.isometry, 1e-12));

    let bad = gallery().into_iter().find(|e| e.name == "non_isometry").expect("gallery entry").map;
    match wojcik_decompose(&bad, 1e-9) {
        Ok(_) => println!("unexpected factorization"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

//! Turn a mixed-type isometry into a complex-linear one with a corrector.

use orthopreserve::synth::corrector_residuals;
use orthopreserve::{build_corrector, classify_map, random_op_map, OpKind};

fn main() -> orthopreserve::Result<()> {
    let t = random_op_map(2, 5, OpKind::Mixed, 3)?;
    println!("T: {}", classify_map(&t, 1e-9)?.class);

    let r = build_corrector(&t, 1e-9)?;
    let q = r.compose(&t)?;
    let res = corrector_residuals(&q, 1000, 0);
    println!("R∘T: {}", classify_map(&q, 1e-9)?.class);
    println!("complex-linearity residual {:.2e}, isometry residual {:.2e}", res.complex_linearity, res.isometry);
    Ok(())
}

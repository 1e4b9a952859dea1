//! Build canonical mixed-type isometries and read their parameters back.

use orthopreserve::{classify_map, synth_canonical, CanonicalSpec};

fn main() -> orthopreserve::Result<()> {
    for s in [-0.8, 0.0, 0.6, 1.0] {
        let spec = CanonicalSpec::random(3, 6, s, vec![1, -1, 1], 42)?;
        let c = classify_map(&synth_canonical(&spec)?, 1e-9)?;
        let cert = c.certificate.expect("canonical maps preserve orthogonality");
        println!("s = {s:+.2}  ->  {:<16} recovered s = {:+.12}", c.class.as_str(), cert.s);
    }

    match CanonicalSpec::standard(2, 3, 0.5, vec![1, 1]) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("codomain too small: {e}"),
    }
    Ok(())
}

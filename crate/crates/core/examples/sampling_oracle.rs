//! Cross-check the Gram-identity decision against random orthogonal pairs.

use orthopreserve::{gallery, is_orthogonality_preserving, sampling_oracle};

fn main() -> orthopreserve::Result<()> {
    for entry in gallery() {
        let decision = is_orthogonality_preserving(&entry.map, 1e-9)?.preserves();
        let oracle = sampling_oracle(&entry.map, 10_000, 0, 1e-9)?;
        print!("{:<24} decision {:<5} oracle {:<5}", entry.name, decision, oracle.preserving);
        match oracle.witness {
            Some(w) => println!(" witness |<Ax|Ay>| = {:.3e}", w.image_inner.norm()),
            None => println!(" ({} pairs)", oracle.samples_checked),
        }
    }
    Ok(())
}

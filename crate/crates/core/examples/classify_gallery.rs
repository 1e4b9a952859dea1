//! Classify every map in the built-in gallery.

use orthopreserve::{classify_map, gallery};

fn main() -> orthopreserve::Result<()> {
    for entry in gallery() {
        let c = classify_map(&entry.map, 1e-9)?;
        let detail = match &c.certificate {
            Some(cert) => format!("gamma = {:.4}  s = {:+.4}", cert.gamma, cert.s),
            None => String::new(),
        };
        println!("{:<24} {:<30} {detail}", entry.name, c.class.as_str());
        assert_eq!(c.class, entry.expected);
    }
    Ok(())
}

//! Write maps to JSON and read them back exactly.

use orthopreserve::io::{map_from_json_str, map_to_json_string, read_map_file, write_map_file};
use orthopreserve::{random_op_map, OpKind, RealLinearMap};

fn same_parts(a: &RealLinearMap, b: &RealLinearMap) -> bool {
    a.linear_part() == b.linear_part() && a.antilinear_part() == b.antilinear_part()
}

fn main() -> orthopreserve::Result<()> {
    let a = random_op_map(2, 4, OpKind::Mixed, 1)?;
    let text = map_to_json_string(&a);
    println!("{text}");
    assert!(same_parts(&map_from_json_str(&text)?, &a));

    let real_form = r#"{"dim_h":1,"dim_k":1,"real_matrix":[[1,0],[0,-1]]}"#;
    let conj = map_from_json_str(real_form)?;
    println!("real_matrix form is conjugate-linear: {}", conj.is_conjugate_linear(1e-12));

    let path = std::env::temp_dir().join("orthopreserve_example.json");
    write_map_file(&path, &a)?;
    assert!(same_parts(&read_map_file(&path)?, &a));
    println!("round trip through {} ok", path.display());
    Ok(())
}

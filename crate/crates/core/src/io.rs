//! JSON map files.
//!
//! ```json
//! {"dim_h": 2, "dim_k": 2,
//!  "linear_part":     [[[0, 0], [0, 0]], [[0, 0], [1, 0]]],
//!  "antilinear_part": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}
//! ```
//!
//! Matrices are row-major `dim_k × dim_h` with entries `[re, im]`. A file
//! may instead carry `"real_matrix"`, the `2·dim_k × 2·dim_h` real form on
//! interleaved coordinates. Exactly one of the two forms must be present;
//! other keys are ignored. Numbers are written as the shortest decimal that
//! parses back to the same `f64`.

use std::fs;
use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::map::RealLinearMap;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapFile {
    pub dim_h: usize,
    pub dim_k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_part: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antilinear_part: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub real_matrix: Option<Vec<Vec<f64>>>,
}

fn complex_rows(m: &DMatrix<Complex64>) -> Vec<Vec<[f64; 2]>> {
    m.row_iter().map(|row| row.iter().map(|z| [z.re, z.im]).collect()).collect()
}

fn complex_matrix(rows: &[Vec<[f64; 2]>], dim_k: usize, dim_h: usize, what: &str) -> Result<DMatrix<Complex64>> {
    if rows.len() != dim_k || rows.iter().any(|r| r.len() != dim_h) {
        return Err(Error::Dimension(format!("{what} must be {dim_k}×{dim_h}")));
    }
    Ok(DMatrix::from_fn(dim_k, dim_h, |r, c| Complex64::new(rows[r][c][0], rows[r][c][1])))
}

impl MapFile {
    pub fn from_map(map: &RealLinearMap) -> Self {
        Self {
            dim_h: map.dim_h(),
            dim_k: map.dim_k(),
            linear_part: Some(complex_rows(map.linear_part())),
            antilinear_part: Some(complex_rows(map.antilinear_part())),
            real_matrix: None,
        }
    }

    pub fn to_map(&self) -> Result<RealLinearMap> {
        if self.dim_h == 0 || self.dim_k == 0 {
            return Err(Error::Dimension("dim_h and dim_k must be positive".into()));
        }
        match (&self.linear_part, &self.antilinear_part, &self.real_matrix) {
            (Some(lin), Some(anti), None) => RealLinearMap::new(
                complex_matrix(lin, self.dim_k, self.dim_h, "linear_part")?,
                complex_matrix(anti, self.dim_k, self.dim_h, "antilinear_part")?,
            ),
            (None, None, Some(rows)) => {
                let cols = rows.first().map_or(0, Vec::len);
                if rows.iter().any(|r| r.len() != cols) {
                    return Err(Error::Format("real_matrix rows have different lengths".into()));
                }
                if rows.len() % 2 != 0 || cols % 2 != 0 {
                    return Err(Error::Format(format!("real_matrix must have even dimensions, got {}×{cols}", rows.len())));
                }
                if rows.len() != 2 * self.dim_k || cols != 2 * self.dim_h {
                    return Err(Error::Dimension(format!(
                        "real_matrix must be {}×{}, got {}×{cols}",
                        2 * self.dim_k,
                        2 * self.dim_h,
                        rows.len()
                    )));
                }
                RealLinearMap::from_real_form(DMatrix::from_fn(rows.len(), cols, |r, c| rows[r][c]))
            }
            _ => Err(Error::Format(
                "exactly one of {linear_part + antilinear_part} or {real_matrix} must be present".into(),
            )),
        }
    }
}

pub fn map_from_json_str(text: &str) -> Result<RealLinearMap> {
    let file: MapFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.to_map()
}

pub fn map_from_json_value(value: Value) -> Result<RealLinearMap> {
    let file: MapFile = serde_json::from_value(value).map_err(|e| Error::Format(e.to_string()))?;
    file.to_map()
}

pub fn map_to_json_value(map: &RealLinearMap) -> Value {
    serde_json::to_value(MapFile::from_map(map)).expect("map files always serialize")
}

pub fn map_to_json_string(map: &RealLinearMap) -> String {
    serde_json::to_string_pretty(&MapFile::from_map(map)).expect("map files always serialize")
}

pub fn read_map_file(path: &Path) -> Result<RealLinearMap> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    map_from_json_str(&text)
}

pub fn write_json_file(path: &Path, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn write_map_file(path: &Path, map: &RealLinearMap) -> Result<()> {
    write_json_file(path, &map_to_json_value(map))
}

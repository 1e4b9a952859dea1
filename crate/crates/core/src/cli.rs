//! Command implementations behind the `opmap` binary.
//!
//! Each command returns a JSON report and a process exit code:
//! 0 success, 1 usage error, 2 malformed or invalid input, 3 precondition
//! failure, 4 disagreement between the sampling oracle and the decision.
//! Every report carries the tool version and the full parameter set.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::classify::{classify_map_seeded, is_orthogonality_preserving, sampling_oracle, OpDecision, RANGE_MEMBERSHIP_TOL};
use crate::error::Error;
use crate::io::{map_to_json_value, read_map_file, write_json_file};
use crate::random::derive_seed;
use crate::space::ComplexVec;
use crate::synth::{build_corrector, corrector_residuals, synth_canonical, CanonicalSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_SEED: u64 = 0;
pub const CORRECTOR_CHECK_SAMPLES: usize = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutput {
    pub code: i32,
    pub report: Value,
}

impl CommandOutput {
    fn new(code: i32, report: Value) -> Self {
        Self { code, report }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Format(_) | Error::Io(_) | Error::Spec(_) | Error::InsufficientCodomain { .. } => EXIT_INVALID_INPUT,
        _ => EXIT_PRECONDITION,
    }
}

fn tool() -> Value {
    json!({ "name": env!("CARGO_PKG_NAME"), "version": env!("CARGO_PKG_VERSION") })
}

fn error_report(err: &Error) -> Value {
    json!({ "error": err.to_string() })
}

fn vec_json(v: &ComplexVec) -> Value {
    Value::Array(v.entries().iter().map(|z| json!([z.re, z.im])).collect())
}

fn with_header(command: &str, parameters: Value, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("tool".into(), tool());
    out.insert("command".into(), command.into());
    out.insert("parameters".into(), parameters);
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

/// `*.json` files of a directory in name order, or the path itself.
fn input_files(input: &Path) -> Result<Vec<PathBuf>, Error> {
    if !input.is_dir() {
        return Ok(vec![input.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = fs::read_dir(input)
        .map_err(|e| Error::Io(format!("{}: {e}", input.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn file_seed(seed: u64, path: &Path) -> u64 {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    derive_seed(seed, &name)
}

/// Runs `per_file` over one file or, concurrently, over every `*.json` in
/// a directory. Batch output lists results in file-name order and exits
/// with the largest per-file code.
fn run_over_inputs<F>(command: &str, input: &Path, parameters: Value, per_file: F) -> CommandOutput
where
    F: Fn(&Path) -> (i32, Value) + Sync,
{
    let files = match input_files(input) {
        Ok(files) => files,
        Err(e) => return CommandOutput::new(exit_code(&e), with_header(command, parameters, error_report(&e))),
    };
    if !input.is_dir() {
        let (code, body) = per_file(&files[0]);
        return CommandOutput::new(code, with_header(command, parameters, body));
    }
    let results: Vec<(i32, Value)> = files
        .par_iter()
        .map(|path| {
            let (code, mut body) = per_file(path);
            if let Value::Object(fields) = &mut body {
                fields.insert("file".into(), path.display().to_string().into());
            }
            (code, body)
        })
        .collect();
    let code = results.iter().map(|(c, _)| *c).max().unwrap_or(EXIT_OK);
    let body = json!({ "results": results.into_iter().map(|(_, v)| v).collect::<Vec<_>>() });
    CommandOutput::new(code, with_header(command, parameters, body))
}

fn classify_file(path: &Path, tol: f64, seed: u64) -> (i32, Value) {
    let result = read_map_file(path).and_then(|map| classify_map_seeded(&map, tol, file_seed(seed, path)));
    let classification = match result {
        Ok(c) => c,
        Err(e) => return (exit_code(&e), error_report(&e)),
    };
    let mut body = Map::new();
    body.insert("classification".into(), classification.class.as_str().into());
    if let Some(cert) = &classification.certificate {
        body.insert("gamma".into(), cert.gamma.into());
        body.insert("s".into(), cert.s.into());
        body.insert("c".into(), cert.c.into());
        body.insert("both_directions".into(), cert.both_directions.into());
    }
    if let Some(criteria) = &classification.criteria {
        body.insert("criteria".into(), json!({ "b": criteria.b, "c": criteria.c, "d": criteria.d }));
    }
    body.insert("tolerances".into(), json!({ "tol": tol, "range_membership": RANGE_MEMBERSHIP_TOL }));
    (EXIT_OK, Value::Object(body))
}

pub fn cmd_classify(input: &Path, tol: f64, seed: u64) -> CommandOutput {
    let parameters = json!({ "input": input.display().to_string(), "tol": tol, "seed": seed });
    run_over_inputs("classify", input, parameters, |path| classify_file(path, tol, seed))
}

fn check_file(path: &Path, samples: usize, seed: u64, tol: f64) -> (i32, Value) {
    let map = match read_map_file(path) {
        Ok(map) => map,
        Err(e) => return (exit_code(&e), error_report(&e)),
    };
    let outcome = is_orthogonality_preserving(&map, tol)
        .and_then(|decision| Ok((decision, sampling_oracle(&map, samples, file_seed(seed, path), tol)?)));
    let (decision, oracle) = match outcome {
        Ok(pair) => pair,
        Err(e) => return (exit_code(&e), error_report(&e)),
    };
    let class = match &decision {
        OpDecision::Zero => "zero",
        OpDecision::NotPreserving => "not_orthogonality_preserving",
        OpDecision::Preserving(cert) => cert.class(tol).as_str(),
    };
    let agree = decision.preserves() == oracle.preserving;
    let witness = oracle.witness.as_ref().map_or(Value::Null, |w| {
        json!({
            "x": vec_json(&w.x),
            "y": vec_json(&w.y),
            "image_x": vec_json(&w.image_x),
            "image_y": vec_json(&w.image_y),
            "image_inner": [w.image_inner.re, w.image_inner.im],
        })
    });
    let body = json!({
        "oracle": oracle.preserving,
        "decision": decision.preserves(),
        "agree": agree,
        "classification": class,
        "samples_checked": oracle.samples_checked,
        "witness": witness,
    });
    (if agree { EXIT_OK } else { EXIT_DISAGREEMENT }, body)
}

pub fn cmd_check(input: &Path, samples: usize, seed: u64, tol: f64) -> CommandOutput {
    let parameters = json!({ "input": input.display().to_string(), "samples": samples, "seed": seed, "tol": tol });
    if samples == 0 {
        let err = Error::Precondition("--samples must be at least 1".into());
        return CommandOutput::new(EXIT_USAGE, with_header("check", parameters, error_report(&err)));
    }
    run_over_inputs("check", input, parameters, |path| check_file(path, samples, seed, tol))
}

/// Writes the canonical map. Without a seed the standard bases are used;
/// with one, orthonormal systems are drawn from it.
pub fn cmd_synth(dim_h: usize, dim_k: usize, s: f64, sigma: Option<Vec<i8>>, seed: Option<u64>, out: &Path) -> CommandOutput {
    let sigma = sigma.unwrap_or_else(|| vec![1; dim_h]);
    let parameters = json!({
        "dim_h": dim_h, "dim_k": dim_k, "s": s, "sigma": sigma, "seed": seed,
        "out": out.display().to_string(),
    });
    let result = match seed {
        Some(seed) => CanonicalSpec::random(dim_h, dim_k, s, sigma, seed),
        None => CanonicalSpec::standard(dim_h, dim_k, s, sigma),
    }
    .and_then(|spec| synth_canonical(&spec));
    let map = match result {
        Ok(map) => map,
        Err(e) => return CommandOutput::new(exit_code(&e), with_header("synth", parameters, error_report(&e))),
    };
    let mut file = map_to_json_value(&map);
    if let Value::Object(fields) = &mut file {
        fields.insert("tool".into(), tool());
        fields.insert("parameters".into(), parameters.clone());
    }
    if let Err(e) = write_json_file(out, &file) {
        return CommandOutput::new(exit_code(&e), with_header("synth", parameters, error_report(&e)));
    }
    CommandOutput::new(EXIT_OK, with_header("synth", parameters, json!({ "written": out.display().to_string() })))
}

/// Decomposes the input as `γ·T`, builds the corrector `R` of `T` and
/// writes `R` together with residuals of `R∘T` from being a complex-linear
/// isometry.
pub fn cmd_corrector(input: &Path, out: &Path, tol: f64, seed: u64) -> CommandOutput {
    let parameters = json!({
        "input": input.display().to_string(), "out": out.display().to_string(),
        "tol": tol, "seed": seed, "samples": CORRECTOR_CHECK_SAMPLES,
    });
    let fail = |e: Error| CommandOutput::new(exit_code(&e), with_header("corrector", parameters.clone(), error_report(&e)));

    let map = match read_map_file(input) {
        Ok(map) => map,
        Err(e) => return fail(e),
    };
    let cert = match is_orthogonality_preserving(&map, tol) {
        Ok(OpDecision::Preserving(cert)) => cert,
        Ok(_) => return fail(Error::Precondition("the input does not preserve orthogonality (or is zero)".into())),
        Err(e) => return fail(e),
    };
    let t = map.scale(1.0 / cert.gamma);
    let corrector = match build_corrector(&t, tol) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let composed = corrector.compose(&t).expect("corrector acts on the codomain of T");
    let residuals = corrector_residuals(&composed, CORRECTOR_CHECK_SAMPLES, seed);

    let verification = json!({
        "input_classification": cert.class(tol).as_str(),
        "gamma": cert.gamma,
        "s": cert.s,
        "complex_linearity_residual": residuals.complex_linearity,
        "isometry_residual": residuals.isometry,
        "samples": residuals.samples,
    });
    let mut file = map_to_json_value(&corrector);
    if let Value::Object(fields) = &mut file {
        fields.insert("verification".into(), verification.clone());
        fields.insert("tool".into(), tool());
        fields.insert("parameters".into(), parameters.clone());
    }
    if let Err(e) = write_json_file(out, &file) {
        return fail(e);
    }
    CommandOutput::new(EXIT_OK, with_header("corrector", parameters, json!({ "verification": verification })))
}

fn text_lines(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(fields) => {
            for (key, v) in fields {
                let name = if prefix.is_empty() { key.clone() } else { format!("{prefix}.{key}") };
                text_lines(&name, v, out);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            for (i, v) in items.iter().enumerate() {
                text_lines(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

/// Flattened `key: value` lines.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    text_lines("", report, &mut out);
    out
}

pub fn render(report: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("JSON values always serialize"),
        OutputFormat::Text => render_text(report),
    }
}

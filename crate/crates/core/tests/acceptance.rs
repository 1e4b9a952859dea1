//! Acceptance suite. Run with
//! `cargo test -p orthopreserve --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use common::*;
use orthopreserve::classify::{dimension_bound_check, OpDecision};
use orthopreserve::ortho::is_orthogonal;
use orthopreserve::random::{complex_gaussian, nonzero_complex_gaussian, seeded, unit_complex_gaussian};
use orthopreserve::synth::{corrector_residuals, paper_counterexample};
use orthopreserve::typing::check_orthogonal_propagation;
use orthopreserve::{
    birkhoff_min, build_corrector, classify_point, gallery, is_orthogonality_preserving, is_real_isometry,
    range_distance, sample_orthogonal_pairs, sampling_oracle, theorem_equivalence_check, type_profile,
    wojcik_decompose, ComplexVec, MapClass, OpKind, PointType, RealLinearMap,
};
use rand::Rng;

const TOL: f64 = 1e-9;

#[test]
fn criterion_01_paper_counterexample() {
    let start = Instant::now();
    let t = paper_counterexample();
    let isometry = is_real_isometry(&t, 1e-12);
    let decision = is_orthogonality_preserving(&t, TOL).unwrap();
    let oracle = sampling_oracle(&t, 10_000, 0, TOL).unwrap();
    let witness_ok = oracle.witness.as_ref().is_some_and(|w| {
        is_orthogonal(&w.x, &w.y, 1e-10).unwrap() && !is_orthogonal(&w.image_x, &w.image_y, TOL).unwrap()
    });
    let elapsed = start.elapsed().as_secs_f64();

    let pass = isometry && decision == OpDecision::NotPreserving && !oracle.preserving && witness_ok && elapsed < 1.0;
    report(
        1,
        pass,
        &format!(
            "(ᾱ,β) isometry={isometry}, certificate={}, oracle={}, witness={witness_ok}, {elapsed:.3}s",
            decision.preserves(),
            oracle.preserving
        ),
    );
    assert!(pass);
}

#[test]
fn criterion_02_scaled_isometry_factorization() {
    let mut worst = 0.0f64;
    for seed in 0..100u64 {
        let (t, _) = random_op_isometry(seed);
        let r = seeded(seed ^ 0xa11).random_range(0.1..=10.0);
        let d = wojcik_decompose(&t.scale(r), TOL).unwrap();
        worst = worst.max((d.gamma - r).abs() / r);
    }
    let pass = worst <= 1e-12;
    report(2, pass, &format!("100 maps r·T, max relative γ error {worst:.2e} (≤ 1e-12)"));
    assert!(pass);
}

#[test]
fn criterion_03_point_decomposition_invariants() {
    let (mut worst_re, mut worst_pyth) = (0.0f64, 0.0f64);
    for seed in 0..100u64 {
        let (t, _) = random_op_isometry(1000 + seed);
        let mut rng = seeded(seed);
        for _ in 0..100 {
            let u = unit_complex_gaussian(&mut rng, t.dim_h());
            let p = type_profile(&t, &u, TOL).unwrap();
            worst_re = worst_re.max(p.alpha.re.abs());
            worst_pyth = worst_pyth.max((p.s * p.s + p.eta_norm * p.eta_norm - 1.0).abs());
        }
    }
    let pass = worst_re <= 1e-9 && worst_pyth <= 1e-9;
    report(3, pass, &format!("max |Re α| {worst_re:.2e}, max |s²+‖η‖²−1| {worst_pyth:.2e} (≤ 1e-9)"));
    assert!(pass);
}

#[test]
fn criterion_04_type_propagation() {
    let mut suite: Vec<RealLinearMap> = gallery()
        .into_iter()
        .filter(|e| e.expected != MapClass::NotOrthogonalityPreserving && e.expected != MapClass::Zero)
        .map(|e| e.map)
        .filter(|m| is_real_isometry(m, TOL))
        .collect();
    suite.extend((0..20u64).map(|seed| random_op_isometry(2000 + seed).0));

    let mut failures = Vec::new();
    let (mut s_spread, mut eta_spread) = (0.0f64, 0.0f64);
    for (idx, t) in suite.iter().enumerate() {
        let mut rng = seeded(idx as u64);
        let profiles: Vec<_> = (0..1000)
            .map(|_| type_profile(t, &nonzero_complex_gaussian(&mut rng, t.dim_h()), TOL).unwrap())
            .collect();
        let types: Vec<PointType> = profiles.iter().map(|p| classify_point(p, TOL)).collect();
        if !types.iter().all(|&ty| ty == types[0]) {
            failures.push(format!("map {idx}: mixed point types"));
        }
        let spread = |f: &dyn Fn(&orthopreserve::TypeProfile) -> f64| {
            let vals: Vec<f64> = profiles.iter().map(f).collect();
            vals.iter().cloned().fold(f64::MIN, f64::max) - vals.iter().cloned().fold(f64::MAX, f64::min)
        };
        let ds = spread(&|p| p.s);
        let de = spread(&|p| p.eta_norm / p.point.norm());
        s_spread = s_spread.max(ds);
        eta_spread = eta_spread.max(de);
        if ds > 1e-9 || de > 1e-9 {
            failures.push(format!("map {idx}: s spread {ds:e}, ‖η‖ spread {de:e}"));
        }

        for (x0, x1) in sample_orthogonal_pairs(t.dim_h(), 100, 7 + idx as u64).unwrap() {
            let r = check_orthogonal_propagation(t, &x0, &x1, TOL).unwrap();
            if !r.all_hold() {
                failures.push(format!("map {idx}: propagation failed {r:?}"));
                break;
            }
        }
    }
    let pass = failures.is_empty();
    report(
        4,
        pass,
        &format!(
            "{} isometries, s spread {s_spread:.2e}, ‖η‖ spread {eta_spread:.2e}, {} failures",
            suite.len(),
            failures.len()
        ),
    );
    assert!(pass, "{failures:?}");
}

#[test]
fn criterion_05_theorem_equivalence() {
    let mut mismatches = 0;
    let (mut pure, mut mixed) = (0, 0);
    for seed in 0..100u64 {
        let (t, kind) = random_op_isometry(3000 + seed);
        let r = seeded(seed).random_range(0.5..=3.0);
        let report_ = theorem_equivalence_check(&t.scale(r), TOL, seed).unwrap();
        if !report_.all_agree() || report_.a != (kind != OpKind::Mixed) {
            mismatches += 1;
        }
        if kind == OpKind::Mixed {
            mixed += 1;
        } else {
            pure += 1;
        }
    }
    let pass = mismatches == 0 && pure > 0 && mixed > 0;
    report(5, pass, &format!("100 maps ({pure} pure, {mixed} mixed), {mismatches} mismatches among (a)–(d)"));
    assert!(pass);
}

#[test]
fn criterion_06_range_gap() {
    let (mut worst_eta_gap, mut min_rotation_dist) = (f64::INFINITY, f64::INFINITY);
    for seed in 0..20u64 {
        let t = random_mixed_isometry(4000 + seed);
        let cert = is_orthogonality_preserving(&t, TOL).unwrap().certificate().cloned().unwrap();
        assert!(cert.s.abs() <= 0.95 + 1e-12);
        let eta = &cert.basis_data[0].1;
        worst_eta_gap = worst_eta_gap.min(range_distance(&t, &eta.mul_i()).unwrap() - eta.norm());

        let mut rng = seeded(seed);
        for _ in 0..100 {
            let z = unit_complex_gaussian(&mut rng, t.dim_h());
            let v = t.apply(&z).unwrap().mul_i();
            min_rotation_dist = min_rotation_dist.min(range_distance(&t, &v).unwrap());
        }
    }
    let pass = worst_eta_gap >= -1e-9 && min_rotation_dist >= 0.05;
    report(
        6,
        pass,
        &format!("min dist(iη, T(H)) − ‖η‖ = {worst_eta_gap:.2e} (≥ −1e-9); min dist(iT(z), T(H)) = {min_rotation_dist:.3} (≥ 0.05)"),
    );
    assert!(pass);
}

/// Maps `ℂ^m → ℂ^n` with `n < 2m` from several families, some of which
/// preserve orthogonality.
fn narrow_codomain_map(seed: u64) -> RealLinearMap {
    let mut rng = seeded(seed);
    let m = rng.random_range(2..=4);
    let n = rng.random_range(m..2 * m);
    match seed % 6 {
        0 => orthopreserve::random_op_map(m, n, OpKind::PureLinear, seed).unwrap().scale(rng.random_range(0.1..10.0)),
        1 => orthopreserve::random_op_map(m, n, OpKind::PureConjugate, seed).unwrap(),
        2 => real_isometry(m, n, seed),
        3 => truncated_mixed(m, n, seed),
        4 => random_arbitrary_map(m, n, seed),
        _ => perturbed(&orthopreserve::random_op_map(m, n, OpKind::PureLinear, seed).unwrap(), 1e-3, seed),
    }
}

#[test]
fn criterion_07_dimension_bound() {
    let start = Instant::now();
    let (mut passing, mut exceptions) = (0, 0);
    for seed in 0..10_000u64 {
        let a = narrow_codomain_map(seed);
        assert!(a.dim_k() < 2 * a.dim_h());
        if let OpDecision::Preserving(cert) = is_orthogonality_preserving(&a, TOL).unwrap() {
            passing += 1;
            if cert.s.abs() < 1.0 - 1e-6 || !dimension_bound_check(a.dim_h(), a.dim_k(), &cert, 1e-6) {
                exceptions += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = exceptions == 0 && passing > 0 && elapsed < 60.0;
    report(7, pass, &format!("10⁴ maps with n < 2m, {passing} certified, {exceptions} with |s| < 1 − 1e-6, {elapsed:.1}s"));
    assert!(pass);
}

#[test]
fn criterion_08_corrector() {
    let mut failures = Vec::new();
    let (mut worst_lin, mut worst_iso) = (0.0f64, 0.0f64);
    for seed in 0..50u64 {
        let (t, _) = random_op_isometry(5000 + seed);
        let r = build_corrector(&t, TOL).unwrap();
        let q = r.compose(&t).unwrap();
        let res = corrector_residuals(&q, 1000, seed);
        worst_lin = worst_lin.max(res.complex_linearity);
        worst_iso = worst_iso.max(res.isometry);
        let oracle = sampling_oracle(&q, 10_000, seed, TOL).unwrap();
        if res.complex_linearity > 1e-9 || res.isometry > 1e-9 || !oracle.preserving {
            failures.push(seed);
        }
    }
    let pass = failures.is_empty();
    report(
        8,
        pass,
        &format!("50 maps, max ‖Q(ix)−iQx‖/‖x‖ {worst_lin:.2e}, max |‖Qx‖−‖x‖|/‖x‖ {worst_iso:.2e}, failures {failures:?}"),
    );
    assert!(pass);
}

fn concordance_population(seed: u64) -> RealLinearMap {
    let mut rng = seeded(seed ^ 0xc0c0);
    let scale = rng.random_range(0.2..5.0);
    match seed % 6 {
        0 | 1 => random_op_isometry(6000 + seed).0.scale(scale),
        2 => {
            let (t, _) = random_op_isometry(6000 + seed);
            perturbed(&t, rng.random_range(1e-3..1e-1), seed)
        }
        3 => {
            let m = rng.random_range(2..=4);
            real_isometry(m, m + rng.random_range(0..=m + 1), seed).scale(scale)
        }
        4 => {
            let m = rng.random_range(2..=4);
            random_arbitrary_map(m, rng.random_range(1..=2 * m + 1), seed)
        }
        _ if seed == 5 => RealLinearMap::zero(3, 2).unwrap(),
        _ => {
            let m = rng.random_range(2..=3);
            truncated_mixed(m, rng.random_range(m..2 * m), seed)
        }
    }
}

#[test]
fn criterion_09_decision_oracle_concordance() {
    let (mut disagreements, mut preserving) = (Vec::new(), 0);
    for seed in 0..500u64 {
        let a = concordance_population(seed);
        let decision = is_orthogonality_preserving(&a, 1e-8).unwrap().preserves();
        let oracle = sampling_oracle(&a, 10_000, seed, 1e-6).unwrap().preserving;
        preserving += usize::from(decision);
        if decision != oracle {
            disagreements.push(seed);
        }
    }
    let pass = disagreements.is_empty() && preserving > 0 && preserving < 500;
    report(
        9,
        pass,
        &format!("500 maps ({preserving} preserving), disagreements {disagreements:?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_10_birkhoff_euclidean_equivalence() {
    let tol = 1e-8;
    let orthogonal = sample_orthogonal_pairs(3, 500, 10).unwrap();
    let mut rng = seeded(11);
    let generic: Vec<(ComplexVec, ComplexVec)> =
        (0..500).map(|_| (complex_gaussian(&mut rng, 3), nonzero_complex_gaussian(&mut rng, 3))).collect();

    let mut mismatches = 0;
    for (x, y) in orthogonal.iter().chain(generic.iter()) {
        let euclid = is_orthogonal(x, y, tol).unwrap();
        let birkhoff = birkhoff_min(x, y).unwrap().min_value >= x.norm() * (1.0 - tol);
        if euclid != birkhoff {
            mismatches += 1;
        }
    }

    let mut worst_grid = 0.0f64;
    for (x, y) in orthogonal.iter().take(50).chain(generic.iter().take(50)) {
        let closed = birkhoff_min(x, y).unwrap().min_value;
        worst_grid = worst_grid.max((closed - grid_birkhoff_min(x, y)).abs());
    }
    let pass = mismatches == 0 && worst_grid <= 1e-3;
    report(10, pass, &format!("10³ pairs, {mismatches} mismatches; grid cross-check max error {worst_grid:.2e} (≤ 1e-3)"));
    assert!(pass);
}

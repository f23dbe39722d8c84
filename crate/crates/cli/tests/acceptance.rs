//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p repdim-cli --test acceptance -- --nocapture` to
//! see the report. Criteria listed in `KNOWN_RED` are expected to fail; the
//! test fails if any other criterion fails, or if a known-red one passes.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{a_tilde, d4, d5, fixture, random_tilting, FIXTURES};
use repdim_cli::{cmd_generator, cmd_gldim, cmd_torsion, cmd_validate, cmd_verify, InstanceSpec, Outcome};
use repdim_core::ar::{coxeter_matrix, coxeter_plus, Catalog, CatalogOptions, IndecLabel};
use repdim_core::cluster::{ClusterCategory, ClusterObject, ClusterTilted};
use repdim_core::linalg::Scalar;
use repdim_core::quiver::{self, Quiver};
use repdim_core::tilting::{enumerate_torsion, validate_tilting, TiltingModule};
use serde_json::Value;

const EJ2_BUDGET: Duration = Duration::from_secs(10);
const EXAMPLE1_BUDGET: Duration = Duration::from_secs(60);
const D4_BUDGET: Duration = Duration::from_secs(60);
const EULER_PAIRS: usize = 200;
const AR_PAIRS: usize = 100;
const MIN_SAMPLES: usize = 50;

/// Criterion 6 asks for exactness of the canonical sequence in `mod B`,
/// which can fail when `Hom(T, τ⁻¹X) ≠ 0`; see the README.
const KNOWN_RED: &[usize] = &[6];

struct Line {
    id: usize,
    pass: bool,
    detail: String,
}

fn line(id: usize, pass: bool, detail: impl Into<String>) -> Line {
    let l = Line { id, pass, detail: detail.into() };
    println!("criterion {}: {} ({})", l.id, if l.pass { "PASS" } else { "FAIL" }, l.detail);
    l
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn arrows(v: &Value) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap()))
        .collect();
    out.sort();
    out
}

fn ej2_quiver() -> Line {
    let spec = fixture("ej2.json");
    let start = Instant::now();
    let report = cmd_generator(&spec).unwrap();
    let elapsed = start.elapsed();
    let q = &report.json["b_quiver"];
    // α: 3→1, β: 3→2, γ: 1→4, δ: 2→4, ε: 4→3, λ: 4→5, μ: 4→6
    let mut expected = vec![(3, 1), (3, 2), (1, 4), (2, 4), (4, 3), (4, 5), (4, 6)];
    expected.sort();
    let got = arrows(&q["arrows"]);
    let vertices = q["vertices"].as_array().unwrap().len();
    let pass = vertices == 6 && got == expected && elapsed < EJ2_BUDGET;
    line(1, pass, format!("{vertices} vertices, arrows {got:?}, {elapsed:.2?}"))
}

fn example1_cones() -> Line {
    let spec = fixture("d12_example1.json");
    let start = Instant::now();
    let validate = cmd_validate(&spec).unwrap();
    let torsion = cmd_torsion(&spec).unwrap();
    let elapsed = start.elapsed();
    let ranks: Vec<u64> = validate.json["tubes"].as_array().unwrap().iter().map(|t| t["rank"].as_u64().unwrap()).collect();
    let cones = torsion.json["cones"].as_array().unwrap();
    let mut shape: Vec<(u64, usize)> =
        cones.iter().map(|c| (c["level"].as_u64().unwrap(), strings(&c["summands"]).len())).collect();
    shape.sort_by(|a, b| b.cmp(a));
    let covered = torsion.json["regular_covered"].as_bool().unwrap();
    let pass = ranks.contains(&10)
        && shape == [(4, 4), (2, 2), (1, 1)]
        && covered
        && torsion.outcome == Outcome::Verified
        && elapsed < EXAMPLE1_BUDGET;
    line(2, pass, format!("tube ranks {ranks:?}, cones (level, summands) {shape:?}, covered {covered}, {elapsed:.2?}"))
}

fn d4_projective_injective() -> Line {
    let spec = fixture("d4_final.json");
    let start = Instant::now();
    let generator = cmd_generator(&spec).unwrap();
    let gldim = cmd_gldim(&spec).unwrap();
    let elapsed = start.elapsed();
    // the regular summand of T, the mouth partner of S₃
    let module = "T0:E2^1";
    let projective = strings(&generator.json["b_quiver"]["vertices"]).iter().any(|v| v == module);
    let injective = strings(&generator.json["injectives"]).iter().any(|v| v == module);
    let slice = generator.json["slice_power"].as_u64().unwrap();
    let cogenerator = generator.json["cogenerator"].as_bool().unwrap();
    let v = &gldim.json["verdict"];
    let gl = v["gl_dim"].as_u64().unwrap();
    let rep = v["rep_dim"].as_u64();
    let pass = projective && injective && slice == 2 && cogenerator && gl == 3 && rep == Some(3) && elapsed < D4_BUDGET;
    line(
        3,
        pass,
        format!(
            "{module} projective {projective} injective {injective}, slice tau^{slice} DH, cogenerator {cogenerator}, \
             gl.dim {gl}, rep.dim {rep:?}, {elapsed:.2?}"
        ),
    )
}

fn ej2_cogenerator_failure() -> Line {
    let spec = fixture("ej2.json");
    let generator = cmd_generator(&spec).unwrap();
    let gldim = cmd_gldim(&spec).unwrap();
    let missing = strings(&generator.json["missing_injectives"]);
    let cogenerator = generator.json["cogenerator"].as_bool().unwrap();
    let v = &gldim.json["verdict"];
    let weak = v["weak_rep_dim"].as_u64();
    let samples = v["samples"].as_u64().unwrap();
    let passed = v["samples_passed"].as_u64().unwrap();
    let pass = missing == ["T0:E3^1"] && !cogenerator && weak == Some(3) && samples > 0 && passed == samples;
    line(4, pass, format!("missing {missing:?}, cogenerator {cogenerator}, w.rep.dim {weak:?}, condition (a) {passed}/{samples}"))
}

struct PropertyCounts {
    euler: usize,
    coxeter: usize,
    ar: usize,
    rigid: usize,
    failures: Vec<String>,
}

/// Evenly spread labels from the catalog window, at most `count` of them.
fn spread(catalog: &Catalog, count: usize) -> Vec<IndecLabel> {
    let all = catalog.window_labels();
    let step = (all.len() / count).max(1);
    all.into_iter().step_by(step).take(count).collect()
}

fn properties(name: &str, t: &TiltingModule, counts: &mut PropertyCounts) {
    let catalog = t.catalog();
    let quiver = catalog.quiver();
    let phi = coxeter_matrix(quiver);
    let labels = spread(catalog, 16);
    let reps: Vec<_> = labels.iter().map(|l| catalog.realize(l).unwrap()).collect();
    for (lx, x) in labels.iter().zip(&reps) {
        let dx = x.dim_vector();
        for (ly, y) in labels.iter().zip(&reps) {
            let (hom, ext) = (quiver::hom_dim(x, y).unwrap() as i64, quiver::ext_dim(x, y).unwrap() as i64);
            if quiver.euler_form(&dx, &y.dim_vector()) != hom - ext {
                counts.failures.push(format!("{name}: Euler form on ({lx}, {ly})"));
            }
            counts.euler += 1;
        }
    }
    for l in catalog.window_labels().iter().filter(|l| !l.is_projective()) {
        let x = catalog.realize(l).unwrap();
        let expected: Vec<Scalar> = phi.mul_vec(&x.dim_vector().into_iter().map(Scalar::from_int).collect::<Vec<_>>());
        let got: Vec<Scalar> = coxeter_plus(&x).dim_vector().into_iter().map(Scalar::from_int).collect();
        if got != expected {
            counts.failures.push(format!("{name}: dim tau {l}"));
        }
        counts.coxeter += 1;
    }
    for (lx, x) in labels.iter().zip(&reps).filter(|(l, _)| !l.is_projective()) {
        let tx = coxeter_plus(x);
        for (ly, y) in labels.iter().zip(&reps) {
            if quiver::ext_dim(x, y).unwrap() != quiver::hom_dim(y, &tx).unwrap() {
                counts.failures.push(format!("{name}: AR formula on ({lx}, {ly})"));
            }
            counts.ar += 1;
        }
    }
    let summands = t.summand_reps().unwrap();
    for x in &summands {
        for y in &summands {
            if quiver::ext_dim(x, y).unwrap() != 0 {
                counts.failures.push(format!("{name}: not rigid"));
            }
        }
    }
    counts.rigid += 1;
}

fn property_suite() -> Line {
    let mut counts = PropertyCounts { euler: 0, coxeter: 0, ar: 0, rigid: 0, failures: Vec::new() };
    let mut instances: Vec<(String, TiltingModule)> =
        FIXTURES.iter().map(|f| (f.to_string(), fixture(f).tilting().unwrap())).collect();
    instances.push(("random A~(2,1)".into(), random_tilting(a_tilde(2, 1), 11)));
    instances.push(("random D~4".into(), random_tilting(d4(), 12)));
    instances.push(("random D~5".into(), random_tilting(d5(), 13)));
    let mut per_instance_ok = true;
    for (name, t) in &instances {
        let before = (counts.euler, counts.ar);
        properties(name, t, &mut counts);
        per_instance_ok &= counts.euler - before.0 >= EULER_PAIRS && counts.ar - before.1 >= AR_PAIRS;
    }
    let pass = counts.failures.is_empty() && per_instance_ok && counts.rigid == instances.len();
    let mut detail = format!(
        "{} instances: Euler {} pairs, Coxeter {} modules, AR formula {} pairs, {} rigid",
        instances.len(),
        counts.euler,
        counts.coxeter,
        counts.ar,
        counts.rigid
    );
    if let Some(first) = counts.failures.first() {
        detail.push_str(&format!("; first failure {first}"));
    }
    line(5, pass, detail)
}

fn canonical_totality() -> Line {
    let mut pass = true;
    let mut parts = Vec::new();
    for f in FIXTURES {
        let spec = fixture(f);
        let report = cmd_verify(&spec).unwrap();
        let samples = report.json["samples"].as_u64().unwrap() as usize;
        let exact = report.json["canonical_passed"].as_u64().unwrap() as usize;
        // no level bound: every tube is sampled up to rank + 2
        let full_tubes = report.json["window"]["levels"].is_null() && spec.options.levels.is_none();
        pass &= samples >= MIN_SAMPLES && full_tubes && exact == samples && report.outcome.exit_code() == 0;
        parts.push(format!("{f} {exact}/{samples} exit {}", report.outcome.exit_code()));
    }
    line(6, pass, parts.join(", "))
}

fn end_of_h_is_h(quiver: Quiver) -> Result<(), String> {
    let n = quiver.vertex_count();
    let mut expected: Vec<(usize, usize)> = quiver.arrows().iter().map(|a| (a.source, a.target)).collect();
    expected.sort();
    let catalog = Arc::new(Catalog::new(quiver, CatalogOptions::default()).map_err(|e| e.to_string())?);
    let h: Vec<ClusterObject> = (0..n).map(|v| ClusterObject::module(IndecLabel::projective(v))).collect();
    let b = ClusterTilted::new(ClusterCategory::new(catalog), h).map_err(|e| e.to_string())?;
    let mut got = b.b_algebra().map_err(|e| e.to_string())?.gabriel_arrows();
    got.sort();
    if got == expected {
        Ok(())
    } else {
        Err(format!("arrows {got:?}, expected {expected:?}"))
    }
}

/// `T(T) = {X : Ext¹(T, X) = 0}`, decided on realized modules.
fn brute_force_torsion(t: &TiltingModule) -> Vec<IndecLabel> {
    let catalog = t.catalog();
    let summands = t.summand_reps().unwrap();
    let mut out: Vec<IndecLabel> = catalog
        .window_labels()
        .into_iter()
        .filter(|l| {
            let x = catalog.realize(l).unwrap();
            summands.iter().all(|s| quiver::ext_dim(s, &x).unwrap() == 0)
        })
        .collect();
    out.sort();
    out
}

fn sanity_anchors() -> Line {
    let kronecker = end_of_h_is_h(Quiver::kronecker());
    let d4_anchor = end_of_h_is_h(d4());
    let catalog = Arc::new(Catalog::new(Quiver::kronecker(), CatalogOptions::default()).unwrap());
    let dh = validate_tilting(&catalog, &[IndecLabel::injective(0), IndecLabel::injective(1)]).unwrap();
    let mut torsion = enumerate_torsion(&dh).unwrap().members();
    torsion.sort();
    let oracle = brute_force_torsion(&dh);
    let expected = vec![IndecLabel::injective(0), IndecLabel::injective(1)];
    let pass = kronecker.is_ok() && d4_anchor.is_ok() && torsion == expected && oracle == expected;
    let show = |r: &Result<(), String>| r.clone().err().unwrap_or_else(|| "H".into());
    let names: Vec<String> = torsion.iter().map(ToString::to_string).collect();
    line(
        7,
        pass,
        format!("End(H) Kronecker {}, D~4 {}; torsion(Kronecker, DH) = {names:?}, oracle agrees {}", show(&kronecker), show(&d4_anchor), oracle == torsion),
    )
}

#[test]
fn acceptance() {
    // warm the fixtures once so parse errors surface before any timing
    for f in FIXTURES {
        let _: InstanceSpec = fixture(f);
    }
    let lines = [
        ej2_quiver(),
        example1_cones(),
        d4_projective_injective(),
        ej2_cogenerator_failure(),
        property_suite(),
        canonical_totality(),
        sanity_anchors(),
    ];
    let unexpected: Vec<String> = lines
        .iter()
        .filter(|l| l.pass == KNOWN_RED.contains(&l.id))
        .map(|l| format!("criterion {} {}: {}", l.id, if l.pass { "passed but is listed as red" } else { "failed" }, l.detail))
        .collect();
    assert!(unexpected.is_empty(), "{}", unexpected.join("\n"));
}

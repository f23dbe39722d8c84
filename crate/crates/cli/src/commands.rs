use std::fmt::Write as _;

use repdim_core::cluster::{BAlgebra, ClusterError, ClusterObject};
use repdim_core::generator::{
    build_generator, choose_slice, cogenerator_check, sample_window, verdict, GeneratorError, GeneratorModule, SampleWindow,
    TiltedInstance, Verdict,
};
use repdim_core::gldim::{end_algebra, resolution_property, AlgebraSummary, CanonicalOutcome, GldimError, DEFAULT_CUTOFF};
use repdim_core::tilting::{classify_torsion, TiltingError};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::dot::{render, Component};
use crate::spec::{InstanceError, InstanceSpec, SpecError};

/// How a command ended, mapped onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Verified,
    Invalid,
    PropertyFailure,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Verified => 0,
            Outcome::Invalid => 1,
            Outcome::PropertyFailure => 2,
        }
    }
}

/// Plain-text report plus its JSON twin.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub outcome: Outcome,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Gldim(#[from] GldimError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Tilting(#[from] TiltingError),
    #[error("cannot write {path}: {message}")]
    Output { path: String, message: String },
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::Spec(s) => CliError::Spec(s),
            InstanceError::Generator(g) => CliError::Generator(g),
        }
    }
}

impl CliError {
    /// 2 for failures that contradict the theory, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        let property = match self {
            CliError::Generator(e) => {
                e.is_property_failure() || matches!(e, GeneratorError::Gldim(GldimError::CutoffReached { .. }))
            }
            CliError::Gldim(GldimError::CutoffReached { .. }) => true,
            _ => false,
        };
        if property {
            2
        } else {
            1
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        return "-".into();
    }
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn names<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

struct Session {
    instance: TiltedInstance,
    generator: GeneratorModule,
    window: SampleWindow,
    cutoff: usize,
}

impl Session {
    fn open(spec: &InstanceSpec) -> Result<Self, CliError> {
        let instance = spec.instance()?;
        let slice = choose_slice(instance.tilting(), instance.torsion(), spec.options.cogenerator);
        let generator = build_generator(&instance, slice)?;
        let mut window = SampleWindow::default_for(&instance, &generator);
        if let Some(power) = spec.options.window {
            window.power = power;
        }
        window.levels = spec.options.levels;
        Ok(Session { instance, generator, window, cutoff: spec.options.cutoff.unwrap_or(DEFAULT_CUTOFF) })
    }
}

#[derive(Serialize)]
struct SummandRow {
    label: String,
    dim_vector: Vec<i64>,
}

#[derive(Serialize)]
struct TubeRow {
    id: usize,
    rank: usize,
    mouth: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct ValidateReport {
    instance: String,
    euclidean_type: String,
    tubes: Vec<TubeRow>,
    summands: Vec<SummandRow>,
    tilting: bool,
    error: Option<String>,
    outcome: Outcome,
}

/// Checks that the file describes a tilting module; never fails on bad
/// mathematical input, only reports it.
pub fn cmd_validate(spec: &InstanceSpec) -> Result<Report, CliError> {
    let catalog = spec.catalog()?;
    let labels = spec.labels()?;
    let tubes: Vec<TubeRow> = catalog
        .tubes()
        .iter()
        .filter(|t| !t.is_homogeneous())
        .map(|t| TubeRow { id: t.id, rank: t.rank, mouth: t.mouth.clone() })
        .collect();
    let mut summands = Vec::new();
    for l in &labels {
        catalog.check_label(l).map_err(|e| SpecError::Field { field: "tilting".into(), message: e.to_string() })?;
        summands.push(SummandRow { label: l.to_string(), dim_vector: catalog.dim_vector(l) });
    }
    let result = spec.tilting();
    let error = result.as_ref().err().map(ToString::to_string);
    let outcome = if error.is_none() { Outcome::Verified } else { Outcome::Invalid };
    let report = ValidateReport {
        instance: spec.name.clone(),
        euclidean_type: catalog.euclidean_type().to_string(),
        tubes,
        summands,
        tilting: error.is_none(),
        error,
        outcome,
    };
    let mut text = String::new();
    writeln!(text, "instance {}", report.instance).unwrap();
    writeln!(text, "quiver {} with {} vertices", report.euclidean_type, catalog.vertex_count()).unwrap();
    for t in &report.tubes {
        writeln!(text, "tube T{} rank {} mouth {:?}", t.id, t.rank, t.mouth).unwrap();
    }
    for s in &report.summands {
        writeln!(text, "summand {} dim {:?}", s.label, s.dim_vector).unwrap();
    }
    match &report.error {
        None => writeln!(text, "tilting: yes").unwrap(),
        Some(e) => writeln!(text, "tilting: no ({e})").unwrap(),
    }
    Ok(Report { text, json: to_json(&report), outcome })
}

#[derive(Serialize)]
struct ConeRow {
    vertex: String,
    level: usize,
    summands: Vec<String>,
    members: Vec<String>,
}

#[derive(Serialize)]
struct TorsionReport {
    instance: String,
    torsion_finite: bool,
    free_finite: bool,
    preinjective: Vec<String>,
    regular: Vec<String>,
    cones: Vec<ConeRow>,
    levels: Vec<usize>,
    regular_covered: bool,
    outcome: Outcome,
}

pub fn cmd_torsion(spec: &InstanceSpec) -> Result<Report, CliError> {
    let instance = spec.instance()?;
    let classification = classify_torsion(instance.tilting());
    let torsion = instance.torsion();
    let cones = instance.cones();
    let regular_covered = torsion.regular.iter().all(|l| cones.contains(l));
    let outcome = if regular_covered { Outcome::Verified } else { Outcome::PropertyFailure };
    let report = TorsionReport {
        instance: spec.name.clone(),
        torsion_finite: classification.torsion_finite,
        free_finite: classification.free_finite,
        preinjective: names(&torsion.preinjective),
        regular: names(&torsion.regular),
        cones: cones
            .cones
            .iter()
            .map(|c| ConeRow {
                vertex: c.cone.vertex.to_string(),
                level: c.cone.level,
                summands: names(&c.summands),
                members: names(&c.cone.members),
            })
            .collect(),
        levels: cones.levels(),
        regular_covered,
        outcome,
    };
    let mut text = String::new();
    writeln!(text, "instance {}", report.instance).unwrap();
    writeln!(text, "torsion class finite: {}, torsion-free class finite: {}", report.torsion_finite, report.free_finite)
        .unwrap();
    writeln!(text, "preinjective torsion ({}): {}", report.preinjective.len(), join(&report.preinjective)).unwrap();
    writeln!(text, "regular torsion ({}): {}", report.regular.len(), join(&report.regular)).unwrap();
    writeln!(text, "maximal cones: {}", report.cones.len()).unwrap();
    for c in &report.cones {
        writeln!(text, "  cone {} level {}: summands {}; members {}", c.vertex, c.level, join(&c.summands), join(&c.members))
            .unwrap();
    }
    writeln!(text, "regular torsion inside the cones: {}", report.regular_covered).unwrap();
    Ok(Report { text, json: to_json(&report), outcome })
}

#[derive(Serialize)]
struct QuiverReport {
    vertices: Vec<String>,
    /// 1-based `(source, target)` pairs.
    arrows: Vec<(usize, usize)>,
    dimension: usize,
}

impl QuiverReport {
    fn new(b: &BAlgebra) -> Self {
        QuiverReport {
            vertices: names(&b.summands),
            arrows: b.gabriel_arrows().into_iter().map(|(s, t)| (s + 1, t + 1)).collect(),
            dimension: b.dimension(),
        }
    }

    fn write(&self, text: &mut String) {
        writeln!(text, "B: {} vertices, dimension {}", self.vertices.len(), self.dimension).unwrap();
        for (k, v) in self.vertices.iter().enumerate() {
            writeln!(text, "  vertex {} = {}", k + 1, v).unwrap();
        }
        let arrows: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}->{t}")).collect();
        writeln!(text, "  arrows {}", join(&arrows)).unwrap();
    }
}

#[derive(Serialize)]
struct GeneratorReport {
    instance: String,
    slice_power: usize,
    n1: Vec<String>,
    shifted: Vec<String>,
    projectives: Vec<String>,
    cones: Vec<Vec<String>>,
    summands: Vec<String>,
    collapsed: Vec<String>,
    b_quiver: QuiverReport,
    injectives: Vec<String>,
    missing_injectives: Vec<String>,
    cogenerator: bool,
    outcome: Outcome,
}

pub fn cmd_generator(spec: &InstanceSpec) -> Result<Report, CliError> {
    let s = Session::open(spec)?;
    let g = &s.generator;
    let b = s.instance.algebra().b_algebra()?;
    let cog = cogenerator_check(&s.instance, g);
    let report = GeneratorReport {
        instance: spec.name.clone(),
        slice_power: g.slice.power,
        n1: names(&g.n1),
        shifted: names(&g.shifted),
        projectives: names(&g.projectives),
        cones: g.cones.iter().map(|c| names(c)).collect(),
        summands: names(&g.summands),
        collapsed: names(&g.collapsed),
        b_quiver: QuiverReport::new(&b),
        injectives: names(&cog.injectives),
        missing_injectives: names(&cog.missing),
        cogenerator: cog.is_cogenerator(),
        outcome: Outcome::Verified,
    };
    let mut text = String::new();
    writeln!(text, "instance {}", report.instance).unwrap();
    writeln!(text, "slice tau^{} DH", report.slice_power).unwrap();
    writeln!(text, "N1: {}", join(&report.n1)).unwrap();
    writeln!(text, "H[1]: {}", join(&report.shifted)).unwrap();
    writeln!(text, "H: {}", join(&report.projectives)).unwrap();
    for (k, c) in report.cones.iter().enumerate() {
        writeln!(text, "W{}: {}", k + 1, join(c)).unwrap();
    }
    writeln!(text, "M' has {} indecomposable summands", report.summands.len()).unwrap();
    writeln!(text, "collapsed in add(tau T): {}", join(&report.collapsed)).unwrap();
    report.b_quiver.write(&mut text);
    writeln!(text, "injective B-modules: {}", join(&report.injectives)).unwrap();
    writeln!(text, "missing from M': {}", join(&report.missing_injectives)).unwrap();
    writeln!(text, "cogenerator: {}", report.cogenerator).unwrap();
    Ok(Report { text, json: to_json(&report), outcome: report.outcome })
}

#[derive(Serialize)]
struct SampleRow {
    sample: String,
    /// Terms `M_0, M_1, …` of the minimal `add(M')`-resolution.
    resolution: Option<Vec<String>>,
    condition: bool,
    canonical: String,
    canonical_exact: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    instance: String,
    window: SampleWindow,
    samples: usize,
    condition_passed: usize,
    canonical_passed: usize,
    alternating_sums_vanish: bool,
    rows: Vec<SampleRow>,
    outcome: Outcome,
}

pub fn cmd_verify(spec: &InstanceSpec) -> Result<Report, CliError> {
    let s = Session::open(spec)?;
    let samples = sample_window(&s.instance, &s.generator, s.window);
    let cert = resolution_property(&s.instance, &s.generator, &samples)?;
    let rows: Vec<SampleRow> = cert
        .entries
        .iter()
        .map(|e| SampleRow {
            sample: e.sample.to_string(),
            resolution: e.approximation.as_ref().map(|terms| terms.iter().map(|t| direct_sum(t)).collect()),
            condition: e.satisfies_condition(),
            canonical: match &e.canonical {
                None => "in add(M')".into(),
                Some(CanonicalOutcome::Exact(_)) => "exact".into(),
                Some(CanonicalOutcome::Failed(reason)) => reason.clone(),
            },
            canonical_exact: e.canonical_exact(),
        })
        .collect();
    let all_exact = cert.holds() && cert.canonical_passed() == cert.entries.len();
    let report = VerifyReport {
        instance: spec.name.clone(),
        window: s.window,
        samples: samples.len(),
        condition_passed: cert.passed(),
        canonical_passed: cert.canonical_passed(),
        alternating_sums_vanish: cert.alternating_sums().iter().all(|&x| x == 0),
        rows,
        outcome: if all_exact { Outcome::Verified } else { Outcome::PropertyFailure },
    };
    let mut text = String::new();
    writeln!(text, "instance {}", report.instance).unwrap();
    let levels = report.window.levels.map_or("rank+2".to_string(), |l| l.to_string());
    writeln!(text, "window: power <= {}, tube level <= {}; {} samples", report.window.power, levels, report.samples).unwrap();
    for r in &report.rows {
        let resolution = match &r.resolution {
            Some(terms) => terms.iter().rev().cloned().collect::<Vec<_>>().join(" -> "),
            None => "longer than the cutoff".into(),
        };
        writeln!(text, "  {}: {} -> X; canonical sequence: {}", r.sample, resolution, r.canonical).unwrap();
    }
    writeln!(text, "condition (a), i = 3: {}/{}", report.condition_passed, report.samples).unwrap();
    writeln!(text, "canonical sequence exact in mod B: {}/{}", report.canonical_passed, report.samples).unwrap();
    Ok(Report { text, json: to_json(&report), outcome: report.outcome })
}

fn direct_sum(objects: &[ClusterObject]) -> String {
    if objects.is_empty() {
        return "0".into();
    }
    objects.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

#[derive(Serialize)]
struct GldimReport {
    instance: String,
    b_quiver: QuiverReport,
    end_algebra: AlgebraSummary,
    simple_projective_dimensions: Vec<(String, usize)>,
    condition_passed: usize,
    canonical_passed: usize,
    verdict: Verdict,
    outcome: Outcome,
}

pub fn cmd_gldim(spec: &InstanceSpec) -> Result<Report, CliError> {
    let s = Session::open(spec)?;
    let b = s.instance.algebra().b_algebra()?;
    let end = end_algebra(&s.instance, &s.generator)?;
    let pds = (0..end.object_count())
        .map(|a| end.simple_projective_dimension(a, s.cutoff).map(|d| (end.names()[a].clone(), d)))
        .collect::<Result<Vec<_>, _>>()?;
    let samples = sample_window(&s.instance, &s.generator, s.window);
    let cert = resolution_property(&s.instance, &s.generator, &samples)?;
    let v = verdict(&s.instance, &s.generator, &cert, s.cutoff)?;
    let outcome = if v.weak_rep_dim.is_some() { Outcome::Verified } else { Outcome::PropertyFailure };
    let report = GldimReport {
        instance: spec.name.clone(),
        b_quiver: QuiverReport::new(&b),
        end_algebra: end.summary(),
        simple_projective_dimensions: pds,
        condition_passed: cert.passed(),
        canonical_passed: cert.canonical_passed(),
        verdict: v,
        outcome,
    };
    let v = &report.verdict;
    let mut text = String::new();
    writeln!(text, "instance {}", report.instance).unwrap();
    report.b_quiver.write(&mut text);
    let e = &report.end_algebra;
    writeln!(text, "End(M'): {} objects, dimension {}, Loewy length {}, {} arrows", e.objects, e.dimension, e.loewy_length, e.arrows)
        .unwrap();
    writeln!(text, "gl.dim End(M') = {}", v.gl_dim).unwrap();
    writeln!(text, "generator: {}", v.generator).unwrap();
    writeln!(text, "cogenerator: {} (missing {})", v.cogenerator, join(&v.missing_injectives)).unwrap();
    writeln!(text, "condition (a), i = 3: {}/{} samples", report.condition_passed, v.samples).unwrap();
    writeln!(text, "canonical sequence exact in mod B: {}/{} samples", report.canonical_passed, v.samples).unwrap();
    let show = |d: Option<usize>| d.map_or("not certified".to_string(), |d| d.to_string());
    writeln!(text, "w.rep.dim B = {}", show(v.weak_rep_dim)).unwrap();
    writeln!(text, "rep.dim B = {}", show(v.rep_dim)).unwrap();
    writeln!(text, "definition: {}", v.definition).unwrap();
    Ok(Report { text, json: to_json(&report), outcome })
}

pub fn cmd_dot(spec: &InstanceSpec, component: Component) -> Result<Report, CliError> {
    let s = Session::open(spec)?;
    let text = render(&s.instance, &s.generator, s.window, component)?;
    let json = serde_json::json!({ "instance": spec.name, "component": component, "dot": text });
    Ok(Report { text, json, outcome: Outcome::Verified })
}


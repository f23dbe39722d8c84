use serde::{Deserialize, Serialize};

use crate::ar::IndecLabel;
use crate::cluster::ClusterObject;
use crate::gldim::{end_algebra, ResolutionCertificate};

use super::build::cogenerator_check;
use super::{GeneratorError, GeneratorModule, TiltedInstance};

/// Bounds for the sample modules: transjective power and tube level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleWindow {
    pub power: usize,
    /// `None` means the catalog's own level bound for each tube.
    pub levels: Option<usize>,
}

impl SampleWindow {
    /// Two powers past the slice and past every summand of `T`.
    pub fn default_for(instance: &TiltedInstance, generator: &GeneratorModule) -> Self {
        let top = instance
            .tilting()
            .summands()
            .iter()
            .filter_map(|l| match *l {
                IndecLabel::Transjective { power, .. } => Some(power),
                _ => None,
            })
            .max()
            .unwrap_or(0);
        let power = (generator.slice.power.max(top) + 2).min(instance.tilting().catalog().options().max_power);
        SampleWindow { power, levels: None }
    }
}

/// Catalogued indecomposables in the window whose images are nonzero and
/// not summands of `M'`.
pub fn sample_window(instance: &TiltedInstance, generator: &GeneratorModule, window: SampleWindow) -> Vec<IndecLabel> {
    let catalog = instance.tilting().catalog();
    catalog
        .window_labels()
        .into_iter()
        .filter(|l| match *l {
            IndecLabel::Transjective { power, .. } => power <= window.power,
            IndecLabel::Regular { level, .. } => window.levels.is_none_or(|m| level <= m),
        })
        .filter(|l| {
            let x = ClusterObject::module(*l);
            !generator.contains(&x) && !instance.algebra().collapses(&x)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Every indecomposable projective `B`-module is a summand of `M'`.
    pub generator: bool,
    pub cogenerator: bool,
    pub missing_injectives: Vec<ClusterObject>,
    pub gl_dim: usize,
    pub samples: usize,
    pub samples_passed: usize,
    /// `B` is representation-infinite (tame cluster-tilted of Euclidean type).
    pub representation_infinite: bool,
    pub weak_rep_dim: Option<usize>,
    pub rep_dim: Option<usize>,
    pub definition: String,
}

pub const WEAK_DEFINITION: &str = "w.rep.dim B = least i >= 2 admitting a generator M with gl.dim End(M) <= i \
and an exact 0 -> M_(i-2) -> ... -> M_0 -> X -> 0 in add(M), exact under Hom(M, -), for every X";

pub fn verdict(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    certificate: &ResolutionCertificate,
    cutoff: usize,
) -> Result<Verdict, GeneratorError> {
    let is_generator = instance.algebra().summands().iter().all(|s| generator.contains(s));
    let cogenerator = cogenerator_check(instance, generator);
    let gl_dim = end_algebra(instance, generator)?.global_dimension(cutoff)?;
    let passed = certificate.passed();
    let witness = is_generator && gl_dim <= 3 && certificate.holds();
    let weak_rep_dim = witness.then_some(3);
    let rep_dim = (witness && cogenerator.is_cogenerator()).then_some(3);
    Ok(Verdict {
        generator: is_generator,
        cogenerator: cogenerator.is_cogenerator(),
        missing_injectives: cogenerator.missing,
        gl_dim,
        samples: certificate.entries.len(),
        samples_passed: passed,
        representation_infinite: true,
        weak_rep_dim,
        rep_dim,
        definition: WEAK_DEFINITION.into(),
    })
}

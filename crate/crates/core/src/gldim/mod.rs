//! `End_B(M')` as a basic algebra, its global dimension, and the
//! resolution certificate for condition (a) with `i = 3`.

mod algebra;

pub use algebra::{AlgebraSummary, EndAlgebra, ModuleData};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ar::IndecLabel;
use crate::cluster::{ClusterError, ClusterObject};
use crate::linalg::Matrix;
use crate::generator::{
    canonical_sequence, check_approximation, induced_b_sequence, BSequenceCheck, GeneratorError, GeneratorModule,
    TiltedInstance,
};

pub const DEFAULT_CUTOFF: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GldimError {
    #[error("projective dimension of the simple at {simple} exceeds the cutoff {cutoff}")]
    CutoffReached { simple: String, cutoff: usize },
    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

/// `End_B(M')` over the summands of `M'`, with morphisms taken in
/// `C / add(τT̃)`.
pub fn end_algebra(instance: &TiltedInstance, generator: &GeneratorModule) -> Result<EndAlgebra, GldimError> {
    let b = instance.algebra();
    let objects = &generator.summands;
    let n = objects.len();
    let mut homs = Vec::with_capacity(n * n);
    for x in objects {
        for y in objects {
            homs.push(b.b_hom(x, y)?);
        }
    }
    let bases: Vec<_> = homs.iter().map(|h| h.basis()).collect();
    let dims = (0..n).map(|a| (0..n).map(|c| homs[a * n + c].dim()).collect()).collect();
    let names = objects.iter().map(ClusterObject::to_string).collect();
    EndAlgebra::from_table(names, dims, |a, m, c, f, g| {
        b.compose_coordinates((&objects[a], &objects[m], &objects[c]), &bases[m * n + c][g], &bases[a * n + m][f])
            .map_err(GldimError::from)
    })
}

/// `Hom_B(M', X')` as a module over `End_B(M')^op`, indexed like
/// `generator.summands`.
pub fn hom_functor(instance: &TiltedInstance, generator: &GeneratorModule, x: &ClusterObject) -> Result<ModuleData, GldimError> {
    let b = instance.algebra();
    let objects = &generator.summands;
    let into_x = objects.iter().map(|a| b.b_hom(a, x)).collect::<Result<Vec<_>, _>>()?;
    let dims: Vec<usize> = into_x.iter().map(|h| h.dim()).collect();
    let mut act = Vec::with_capacity(objects.len());
    for (a, oa) in objects.iter().enumerate() {
        let from_a = into_x[a].basis();
        let mut row = Vec::with_capacity(objects.len());
        for (c, oc) in objects.iter().enumerate() {
            let mut mats = Vec::new();
            for r in b.b_hom(oc, oa)?.basis() {
                let cols = from_a.iter().map(|u| b.compose_coordinates((oc, oa, x), u, &r)).collect::<Result<Vec<_>, _>>()?;
                mats.push(Matrix::from_columns(dims[c], &cols));
            }
            row.push(mats);
        }
        act.push(row);
    }
    Ok(ModuleData { name: x.to_string(), dims, act })
}

/// The canonical sequence `0 → K' → (tX)' ⊕ P'_{X/tX} → X' → 0` of a sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CanonicalOutcome {
    Exact(BSequenceCheck),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionEntry {
    pub sample: ClusterObject,
    /// Terms `M_0, M_1, …` of the minimal `add(M')`-resolution of `X'`
    /// that stays exact under `Hom_B(M', −)`; `None` past the cutoff.
    pub approximation: Option<Vec<Vec<ClusterObject>>>,
    /// `None` when `X'` is a summand of `M'`.
    pub canonical: Option<CanonicalOutcome>,
}

impl ResolutionEntry {
    /// `0 → M_1 → M_0 → X' → 0` with both terms in `add(M')`.
    pub fn satisfies_condition(&self) -> bool {
        self.approximation.as_ref().is_some_and(|t| t.len() <= 2)
    }

    pub fn canonical_exact(&self) -> bool {
        matches!(self.canonical, None | Some(CanonicalOutcome::Exact(_)))
    }
}

/// Condition (a) with `i = 3` on a sample set, together with the outcome of
/// the canonical sequence for every sample.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionCertificate {
    pub entries: Vec<ResolutionEntry>,
}

impl ResolutionCertificate {
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.satisfies_condition()).count()
    }

    pub fn holds(&self) -> bool {
        self.passed() == self.entries.len()
    }

    pub fn canonical_passed(&self) -> usize {
        self.entries.iter().filter(|e| e.canonical_exact()).count()
    }

    pub fn canonical_failures(&self) -> Vec<(ClusterObject, String)> {
        self.entries
            .iter()
            .filter_map(|e| match &e.canonical {
                Some(CanonicalOutcome::Failed(reason)) => Some((e.sample, reason.clone())),
                _ => None,
            })
            .collect()
    }

    /// Alternating sums of the canonical rank tables; zero for exact ones.
    pub fn alternating_sums(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter_map(|e| match &e.canonical {
                Some(CanonicalOutcome::Exact(s)) => Some(s),
                _ => None,
            })
            .flat_map(|s| s.rows.iter().map(|r| r.kernel_dim as i64 - r.middle_dim as i64 + r.target_dim as i64))
            .collect()
    }
}

/// Runs the canonical sequence of `sample` through `mod B`.
pub fn canonical_outcome(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    sample: &IndecLabel,
) -> Result<CanonicalOutcome, GeneratorError> {
    let attempt = (|| -> Result<BSequenceCheck, GeneratorError> {
        let rep = instance.tilting().catalog().realize(sample)?;
        let seq = canonical_sequence(instance.tilting(), &rep)?;
        let check = induced_b_sequence(instance, generator, sample, &seq)?;
        check_approximation(&check)?;
        Ok(check)
    })();
    match attempt {
        Ok(check) => Ok(CanonicalOutcome::Exact(check)),
        Err(e) if e.is_property_failure() => Ok(CanonicalOutcome::Failed(e.to_string())),
        Err(e) => Err(e),
    }
}

/// `opposite` is `End_B(M')^op` as built by [`end_algebra`].
pub fn resolution_entry(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    opposite: &EndAlgebra,
    sample: &IndecLabel,
) -> Result<ResolutionEntry, GeneratorError> {
    let x = ClusterObject::module(*sample);
    if generator.contains(&x) {
        return Ok(ResolutionEntry { sample: x, approximation: Some(vec![vec![x]]), canonical: None });
    }
    let functor = hom_functor(instance, generator, &x)?;
    let approximation = match opposite.projective_resolution(&functor, RESOLUTION_CUTOFF) {
        Ok(terms) => Some(terms.into_iter().map(|t| t.into_iter().map(|k| generator.summands[k]).collect()).collect()),
        Err(GldimError::CutoffReached { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let canonical = Some(canonical_outcome(instance, generator, sample)?);
    Ok(ResolutionEntry { sample: x, approximation, canonical })
}

const RESOLUTION_CUTOFF: usize = 4;

pub fn resolution_property(
    instance: &TiltedInstance,
    generator: &GeneratorModule,
    samples: &[IndecLabel],
) -> Result<ResolutionCertificate, GeneratorError> {
    let opposite = end_algebra(instance, generator)?.opposite();
    let entries =
        samples.par_iter().map(|s| resolution_entry(instance, generator, &opposite, s)).collect::<Vec<_>>();
    // the first failure in sample order, whatever the scheduling
    let entries = entries.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(ResolutionCertificate { entries })
}

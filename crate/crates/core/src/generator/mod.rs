//! The generator `M' = M'₁ ⊕ M'₂` of `mod B`, the canonical sequences
//! `0 → K → tX ⊕ P_{X/tX} → X → 0` and their images in `mod B`.

mod build;
mod induced;
mod sequence;
mod verdict;

pub use build::{build_generator, choose_slice, cogenerator_check, edge_factorization, CogeneratorCheck, GeneratorModule};
pub use induced::{check_approximation, induced_b_sequence, BSequenceCheck, HomRankRow};
pub use sequence::{canonical_sequence, factorization_criterion, ApproximationSequence};
pub use verdict::{sample_window, verdict, SampleWindow, Verdict, WEAK_DEFINITION};

use thiserror::Error;

use crate::ar::{ArError, IndecLabel};
use crate::cluster::{ClusterCategory, ClusterError, ClusterObject, ClusterTilted};
use crate::gldim::GldimError;
use crate::quiver::QuiverError;
use crate::tilting::{
    classify_torsion, enumerate_torsion, maximal_cones, ConeDecomposition, TiltingError, TiltingModule, TorsionClass,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("the torsion class of T is infinite (T has no preinjective summand)")]
    TorsionInfinite,
    #[error("X is projective")]
    Projective,
    #[error("X lies in the torsion class")]
    Torsion,
    #[error("torsion member {0} escapes M'")]
    TorsionEscapes(IndecLabel),
    #[error("sequence for {sample} is not exact over H: {reason}")]
    NotExact { sample: String, reason: String },
    #[error("f' is not an epimorphism for {sample} at vertex {vertex}")]
    NotEpi { sample: IndecLabel, vertex: ClusterObject },
    #[error("kernel mismatch for {sample} against {summand}")]
    KernelMismatch { sample: IndecLabel, summand: ClusterObject },
    #[error("factorization criterion disagrees with f' being epi for {0}")]
    CriterionMismatch(IndecLabel),
    #[error("a map {summand}' → {sample}' does not factor through f'")]
    NotApproximation { sample: IndecLabel, summand: ClusterObject },
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Tilting(#[from] TiltingError),
    #[error(transparent)]
    Gldim(#[from] GldimError),
}

impl From<ArError> for GeneratorError {
    fn from(e: ArError) -> Self {
        GeneratorError::Tilting(e.into())
    }
}

impl From<QuiverError> for GeneratorError {
    fn from(e: QuiverError) -> Self {
        GeneratorError::Tilting(ArError::from(e).into())
    }
}

impl GeneratorError {
    /// Whether the failure contradicts a property the theory guarantees,
    /// as opposed to bad input or an exhausted window.
    pub fn is_property_failure(&self) -> bool {
        matches!(
            self,
            GeneratorError::TorsionEscapes(_)
                | GeneratorError::NotExact { .. }
                | GeneratorError::NotEpi { .. }
                | GeneratorError::KernelMismatch { .. }
                | GeneratorError::CriterionMismatch(_)
                | GeneratorError::NotApproximation { .. }
        )
    }
}

/// A validated tilting module with finite torsion class, together with its
/// torsion data and the cluster-tilted algebra it induces.
pub struct TiltedInstance {
    tilting: TiltingModule,
    torsion: TorsionClass,
    cones: ConeDecomposition,
    algebra: ClusterTilted,
}

impl TiltedInstance {
    pub fn new(tilting: TiltingModule) -> Result<Self, GeneratorError> {
        if !classify_torsion(&tilting).torsion_finite {
            return Err(GeneratorError::TorsionInfinite);
        }
        let torsion = enumerate_torsion(&tilting)?;
        let cones = maximal_cones(&tilting)?;
        let summands = tilting.summands().iter().map(|l| ClusterObject::module(*l)).collect();
        let algebra = ClusterTilted::new(ClusterCategory::new(tilting.catalog().clone()), summands)?;
        Ok(TiltedInstance { tilting, torsion, cones, algebra })
    }

    pub fn tilting(&self) -> &TiltingModule {
        &self.tilting
    }

    pub fn torsion(&self) -> &TorsionClass {
        &self.torsion
    }

    pub fn cones(&self) -> &ConeDecomposition {
        &self.cones
    }

    pub fn algebra(&self) -> &ClusterTilted {
        &self.algebra
    }
}

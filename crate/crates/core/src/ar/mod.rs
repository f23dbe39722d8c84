//! Auslander-Reiten theory of tame hereditary algebras: the Coxeter
//! transformation, the translates `τ` and `τ⁻¹`, and a catalog of
//! indecomposables organised by components.

mod catalog;
mod cone;
mod coxeter;
mod label;
mod reflect;
mod tubes;

pub use catalog::{Catalog, CatalogOptions};
pub use cone::{cone, cone_edge, slice_modules, Cone, Slice};
pub use coxeter::{coxeter_matrix, Coxeter, Defect};
pub use label::{IndecLabel, Side};
pub use reflect::{coxeter_minus, coxeter_minus_morphisms, coxeter_plus, coxeter_plus_morphisms};
pub use tubes::{HomogeneousParameter, Tube};

use thiserror::Error;

use crate::quiver::{QuiverError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArError {
    #[error("quiver is not of extended Dynkin type")]
    NotEuclidean,
    #[error("projective summand present")]
    ProjectiveSummand,
    #[error("injective summand present")]
    InjectiveSummand,
    #[error("{0} is not a regular module")]
    NotRegular(IndecLabel),
    #[error("{0} lies outside the catalog window")]
    OutOfWindow(IndecLabel),
    #[error("{0} names no module")]
    UnknownLabel(IndecLabel),
    #[error("no tube with id {0}")]
    UnknownTube(usize),
    #[error("cone of level {level} does not fit in a tube of rank {rank}")]
    ConeTooDeep { level: usize, rank: usize },
    #[error("tube discovery failed: {0}")]
    TubeDiscovery(String),
    #[error("translate of {0} does not match its catalogued neighbour")]
    TranslateMismatch(IndecLabel),
    #[error("no catalogued module matches dimension vector {0:?}")]
    Unidentified(Vec<i64>),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// The Auslander-Reiten translate `τX`.
pub fn tau(x: &Representation) -> Result<Representation, ArError> {
    let y = coxeter_plus(x);
    let expected = Coxeter::new(x.quiver()).tau(&x.dim_vector());
    if y.dim_vector() != expected {
        return Err(ArError::ProjectiveSummand);
    }
    Ok(y)
}

/// The inverse translate `τ⁻¹X`.
pub fn tau_inverse(x: &Representation) -> Result<Representation, ArError> {
    let y = coxeter_minus(x);
    let expected = Coxeter::new(x.quiver()).tau_inverse(&x.dim_vector());
    if y.dim_vector() != expected {
        return Err(ArError::InjectiveSummand);
    }
    Ok(y)
}

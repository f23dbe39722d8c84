//! The cluster category `D^b(H)/τ⁻¹[1]` on its fundamental domain and the
//! cluster-tilted algebra `B = End_C(T̃)`.

mod category;
mod tilted;

pub use category::{ClusterCategory, ClusterHomSpace, ClusterMap, ClusterObject, DMap};
pub use tilted::{BAlgebra, BHomSpace, BModule, ClusterTilted};

use thiserror::Error;

use crate::ar::ArError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("{0} lies outside the fundamental domain or the catalog window")]
    OutOfDomain(ClusterObject),
    #[error("{0} collapses to zero in mod B")]
    CollapsesToZero(ClusterObject),
    #[error(transparent)]
    Ar(#[from] ArError),
}

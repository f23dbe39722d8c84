//! Quivers, representations, and their Hom and Ext spaces.

mod decompose;
mod graph;
mod hom;
mod rep;

pub use decompose::{decompose, find_isomorphism, is_indecomposable, multiplicity, split, SplitSummand};
pub use graph::{Arrow, EuclideanType, Quiver};
pub use hom::{
    euler_form, ext1_space, ext_dim, extension, extension_class, hom_dim, hom_ext_dims, hom_space, right_inverse,
    ExtClass, ExtSpace, HomSpace,
};
pub use rep::{cokernel, kernel, RepMorphism, Representation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("underlying graph is not extended Dynkin")]
    NotEuclidean,
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("matrix shape does not match the dimension vector at arrow {arrow}")]
    Shape { arrow: usize },
    #[error("direct sum of no parts")]
    EmptySum,
    #[error("subspaces are not closed under the arrows")]
    NotSubrepresentation,
    #[error("unidentified summand in module with dimension vector {0:?}")]
    Unidentified(Vec<usize>),
}

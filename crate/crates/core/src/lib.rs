pub mod ar;
pub mod cluster;
pub mod generator;
pub mod gldim;
pub mod linalg;
mod memo;
pub mod quiver;
pub mod tilting;

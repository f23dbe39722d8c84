//! Front-end for instance files: validation, torsion data, the generator
//! `M'`, its resolution certificate, the global-dimension verdict and DOT
//! pictures.

mod commands;
pub mod dot;
pub mod spec;

pub use commands::{cmd_dot, cmd_generator, cmd_gldim, cmd_torsion, cmd_validate, cmd_verify, CliError, Outcome, Report};
pub use dot::Component;
pub use spec::{InstanceSpec, LabelSpec, QuiverSpec, SpecError, SpecOptions};

//! Exact constructions on non-Hausdorff homogeneous 1-manifolds: the complete
//! feather, multilines, the branching line and a cofinite example, together
//! with checkable witnesses for their separation properties.

pub mod error;
pub mod exec;
pub mod feather;
pub mod homeo;
pub mod kernel;
pub mod multiline;
pub mod numeric;
pub mod sample;
pub mod separation;

pub use error::{Error, Result};

//! Hochschild cohomology of bound quiver algebras and its comparison with the
//! cohomology of the incidence algebra attached to a presentation.

pub mod algebra;
pub mod comparison;
pub mod error;
pub mod hochschild;
pub mod homotopy;
pub mod linalg;
pub mod poset;
pub mod quiver;

pub use error::{Error, Result};

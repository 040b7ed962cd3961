//! Exact symbolic engine for the super-Heisenberg group: Grassmann algebra,
//! matrix groups, superfunctions, transforms, oddons and unitary criteria.

pub mod compute;
pub mod error;
pub mod grassmann;
pub mod groups;
pub mod linalg;
pub mod oddons;
pub mod scalar;
pub mod superfunctions;
pub mod transforms;
pub mod unitary;
pub mod verify;

pub use error::{Error, Result};
pub use grassmann::{GeneratorRegistry, GrassmannElement, Parity, PhasedElement, Role};
pub use scalar::{Rational, Scalar};

//! Finite Grassmann algebras with exact complex-rational coefficients.

pub mod checks;
pub mod element;
pub mod json;
pub mod phased;
pub mod registry;

pub use element::{merge_sign, GrassmannElement, Parity};
pub use phased::PhasedElement;
pub use registry::{GeneratorRegistry, Role};

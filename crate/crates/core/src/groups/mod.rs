//! Matrix realizations of the Heisenberg, fermionic and super-Heisenberg groups.

pub mod checks;
pub mod heisenberg;
pub mod super_heisenberg;
pub mod supermatrix;

pub use heisenberg::HeisenbergTuple;
pub use super_heisenberg::{fermionic_mu, supersymplectic_b, SuperHeisenbergTuple};
pub use supermatrix::SuperMatrix;

//! Check records, comparison, randomized cases and the suite registry.

pub mod compare;
pub mod random;
pub mod report;
pub mod suites;

pub use report::{CheckRecord, Report, Verdict};

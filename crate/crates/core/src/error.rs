use thiserror::Error;

use crate::scalar::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("elements belong to different generator registries")]
    RegistryMismatch,

    #[error("generator registry holds {requested} generators, cap is {cap}")]
    TooManyGenerators { requested: usize, cap: usize },

    #[error("duplicate generator label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),

    #[error("expected {expected} element, got {found}")]
    Parity { expected: &'static str, found: String },

    #[error("exponential needs an even nilpotent argument: {0}")]
    NotNilpotent(String),

    #[error("element has zero body and no inverse")]
    NotInvertible,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("matrix size {0} is odd, Pfaffian needs an even size")]
    OddSize(usize),

    #[error("Pfaffian {0} is not the square of a nonzero rational")]
    NonSquarePfaffian(Rational),

    #[error("matrix is singular")]
    Singular,

    #[error("repeated index {0} in multi-index")]
    RepeatedIndex(usize),

    #[error("multi-index {0:?} is not strictly increasing")]
    UnorderedIndex(Vec<usize>),

    #[error("generator `{0}` is already used by the inputs")]
    GeneratorCollision(String),

    #[error("oddon kinds differ")]
    KindMismatch,

    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    #[error("character parameter beta must be positive, got {0}")]
    NonPositiveBeta(Rational),

    #[error("Fock context is not calibrated: {0}")]
    Uncalibrated(String),

    #[error("operation needs a different context mode: {0}")]
    WrongMode(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

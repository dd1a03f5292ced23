//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation needs a homogeneous input and the argument is not.
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    /// No exact antiderivative exists (some Euler component is nonzero).
    #[error("NotExact")]
    NotExact,
    #[error("invalid multidegree: {0}")]
    InvalidMultidegree(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{name}` takes {expected} arguments, got {got}")]
    ArityMismatch {
        name: &'static str,
        expected: usize,
        got: usize,
    },
    /// Support contains a monomial with deg − d ≠ 1.
    #[error("not an element of the free Novikov algebra")]
    NotNovikov,
    /// The hypotheses of the null-Lagrangian criterion are not met.
    #[error("criterion hypotheses not met: {0}")]
    HypothesesNotMet(&'static str),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A transformed Euler operator was requested for a variable with no slots.
    #[error("variable x{var} has no slots in this shape")]
    EmptyGroup { var: u32 },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition sizes differ: |shape| = {shape}, |content| = {content}")]
    SizeMismatch { shape: usize, content: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field extension needed: {0}")]
    FieldExtensionNeeded(String),
    #[error("characteristic too small for {0}")]
    CharacteristicTooSmall(String),
    #[error("not composable")]
    NotComposable,
    #[error("inhomogeneous relation: {0}")]
    Inhomogeneous(String),
    #[error("not finite-dimensional up to degree {0}")]
    NotFiniteDimensional(usize),
    #[error("global dimension exceeds bound {0}")]
    ExceedsBound(usize),
    #[error("not a cut: cycle {0} meets the cut {1} times")]
    NotACut(String, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("reduction incomplete after {0} passes")]
    ReductionIncomplete(usize),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

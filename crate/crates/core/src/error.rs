use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `NotDifferentiable` is a one-step failure (the word contains 111 or 222,
/// or violates the generalized run constraints); `NotSmooth` is a failure at
/// any depth of the derivative tower. The two are deliberately distinct.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is not differentiable (contains a forbidden run)")]
    NotDifferentiable,
    #[error("word is not smooth")]
    NotSmooth,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource ceiling exceeded: {0}")]
    ResourceLimit(String),
    #[error("no word of height {0} satisfies the predicate")]
    EmptyClass(u32),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

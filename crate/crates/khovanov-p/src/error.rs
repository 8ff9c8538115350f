//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A weight was not strictly decreasing.
    #[error("weight entries must be strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<i64>),

    /// An arc list violates the shape rules of cup, cap or matching diagrams.
    #[error("invalid arc system: {0}")]
    InvalidArcs(String),

    /// Two objects that must share a boundary do not.
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),

    /// Operands of a product were built for different algebras.
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    /// An operation needs an orientable diagram and did not get one.
    #[error("diagram is not orientable: {0}")]
    NotOrientable(String),

    /// A precondition stated in the operation's documentation failed.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A residue sequence cannot come from an up-down tableau.
    #[error("not a residue sequence of an up-down tableau: {0:?}")]
    NotRealizable(Vec<i64>),

    /// Internal consistency check failed; indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

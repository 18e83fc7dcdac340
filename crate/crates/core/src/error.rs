use thiserror::Error;

/// Errors raised by the computational layer.
///
/// `Consistency` is reserved for checks whose failure means either an
/// implementation bug or a counterexample to one of the theorems the
/// library verifies; callers should report it, never paper over it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("divisor is not a unit monomial")]
    NonMonomialDivisor,
    #[error("inexact division")]
    InexactDivision,
    #[error("zero polynomial has no support")]
    ZeroPolynomial,
    #[error("negative exponent in a cluster monomial")]
    NegativeExponent,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("operation requires a finite exchange graph")]
    NotFinite,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, bound })
    }
}

pub(crate) fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

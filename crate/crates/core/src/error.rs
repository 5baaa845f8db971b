use thiserror::Error;

use crate::verdict::CheckVerdict;

/// Errors raised by the algebraic kernel, the checkers and the constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand shapes do not fit together.
    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    Shape {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("linear map is not invertible")]
    NotInvertible,

    /// A map handed to a checker as a parameter does not have the required
    /// property (for instance a twisting map that is not an algebra map).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A construction refused to run because one of its hypotheses failed.
    #[error("precondition `{hypothesis}` failed")]
    Precondition {
        hypothesis: String,
        verdict: Box<CheckVerdict>,
    },

    /// Two expressions that must agree under the hypotheses differ.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("search space of {candidates} candidates exceeds the budget of {budget}")]
    SearchTooLarge { candidates: u128, budget: u128 },

    #[error("invalid search specification: {0}")]
    InvalidSearch(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("missing input: {0}")]
    MissingInput(String),
}

impl Error {
    pub(crate) fn shape(context: &'static str, expected: usize, found: usize) -> Self {
        Error::Shape {
            context,
            expected,
            found,
        }
    }

    pub(crate) fn precondition(hypothesis: impl Into<String>, verdict: CheckVerdict) -> Self {
        Error::Precondition {
            hypothesis: hypothesis.into(),
            verdict: Box::new(verdict),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with a shape error unless `expected == found`.
pub(crate) fn ensure_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::shape(context, expected, found))
    }
}

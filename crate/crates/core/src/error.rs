use thiserror::Error;

use crate::report::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    Shape {
        context: &'static str,
        expected: String,
        found: String,
    },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{what} is not center-symmetric: {witness}")]
    NotCenterSymmetric { what: &'static str, witness: Witness },

    #[error("{what} fails {condition}: {witness}")]
    Invalid {
        what: &'static str,
        condition: &'static str,
        witness: Witness,
    },

    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("search space of {size} tensors exceeds {cap}; set a limit")]
    SearchTooLarge { size: String, cap: u128 },

    #[error("empty coefficient set")]
    EmptyCoefficients,

    #[error("subspace basis is linearly dependent")]
    DependentBasis,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn shape(context: &'static str, expected: impl ToString, found: impl ToString) -> Error {
    Error::Shape {
        context,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

use thiserror::Error;

use crate::ring::{AxiomViolation, Elem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op} requires a unital ring")]
    NonUnital { op: &'static str },

    #[error("ring order {order} exceeds the build cap {cap}")]
    OrderOverCap { order: u128, cap: usize },

    #[error("element index {index} out of range for a ring of order {order}")]
    ElementOutOfRange { index: u64, order: usize },

    #[error("element {0} is not idempotent")]
    NotIdempotent(Elem),

    #[error("element {0} is not central")]
    NotCentral(Elem),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal is not nil: element {0} is not nilpotent")]
    NotNilIdeal(Elem),

    #[error("ring is not abelian: idempotent {0} is not central")]
    NotAbelian(Elem),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("malformed ring spec: {0}")]
    MalformedSpec(String),

    #[error("ring axioms fail: {0}")]
    Axioms(AxiomViolation),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

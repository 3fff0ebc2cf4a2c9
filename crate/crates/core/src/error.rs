use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("mixed fields: expected {expected}, found {found}")]
    MixedFields { expected: Field, found: Field },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("group axiom violated: {0}")]
    GroupAxiom(String),
    #[error("not a permutation of 0..{degree}: {detail}")]
    NotBijective { degree: usize, detail: String },
    #[error("not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("invalid homomorphism data: {0}")]
    InvalidMap(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("subgroup {0} is not normal")]
    NotNormal(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("containment failure: {0}")]
    Containment(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

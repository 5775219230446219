use thiserror::Error;

use crate::scalars::Rational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter value {0} is a pole")]
    Pole(Rational),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("parameter mismatch between algebra elements")]
    ParameterMismatch,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("size bound exceeded: {0}")]
    Bound(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("relation check failed: {0}")]
    Relation(String),
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("step cap of {0} exceeded")]
    StepCap(usize),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

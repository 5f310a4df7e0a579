use thiserror::Error;

use crate::space::MAX_VARS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("too many variables (at most {MAX_VARS} are supported)")]
    TooManyVariables,
    #[error("variable spaces are incompatible")]
    IncompatibleSpaces,
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution hits a pole")]
    PoleHit,
    #[error("denominator has a factor in `{0}` not covered by the pole list")]
    UnaccountedPole(String),
    #[error("no rational root found: {0}")]
    NonRationalRoot(String),
    #[error("candidate search exceeded {0} candidates")]
    SearchLimit(usize),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;

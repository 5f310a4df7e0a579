use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] painleve_core::Error),
    #[error("off-diagonal entry q{0} vanishes identically")]
    ZeroOffDiagonal(&'static str),
    #[error("not Fuchsian at {point}: {detail}")]
    NotFuchsian { point: String, detail: String },
    #[error("exponents at {0} are not rational in the parameters")]
    IrrationalExponent(String),
    #[error("apparent point {0} coincides with a singular point")]
    ApparentCollision(String),
    #[error("off-diagonal entry has an irrational zero: {0}")]
    IrrationalZero(String),
    #[error("equation has no tracked off-diagonal entry")]
    Untracked,
    #[error("potential does not fit the four-point template: {0}")]
    TemplateMismatch(String),
    #[error("theta_{index} = ±({found}) does not match the reference value {expected}")]
    ThetaMismatch { index: usize, found: String, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;

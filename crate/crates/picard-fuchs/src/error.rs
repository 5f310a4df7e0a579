use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] painleve_core::Error),
    #[error("unknown curve family {0}; expected 1 to 5")]
    UnknownFamily(u8),
    #[error("degenerate family: {0}")]
    Degenerate(String),
    #[error("singular point not rational in the parameters: {0}")]
    IrrationalRoot(String),
    #[error("expected three distinct finite singular points, found {0}")]
    SingularCount(usize),
    #[error("family has no stored reparametrization; rationalize it first")]
    NotRationalized,
    #[error("connection does not fit the family: {0}")]
    Pairing(String),
    #[error("malformed system file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

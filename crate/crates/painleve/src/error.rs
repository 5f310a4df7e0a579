use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] painleve_core::Error),
    #[error(transparent)]
    PicardFuchs(#[from] painleve_picard_fuchs::Error),
    #[error(transparent)]
    Scalar(#[from] painleve_scalar::Error),
    #[error(transparent)]
    Schlesinger(#[from] painleve_schlesinger::Error),
    #[error(transparent)]
    Convolution(#[from] painleve_convolution::Error),
    #[error("the registry has no row {0}")]
    UnknownRow(u8),
    #[error("row {0} is a degenerate locus and has no parametrized solution")]
    DegenerateRow(u8),
    #[error("t does not depend on b")]
    ConstantTime,
    #[error("degenerate solution: {0}")]
    Degenerate(String),
    #[error("expected one apparent singularity, found {0}")]
    ApparentCount(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

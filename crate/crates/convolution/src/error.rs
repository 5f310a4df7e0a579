use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] painleve_core::Error),
    #[error(transparent)]
    Schlesinger(#[from] painleve_schlesinger::Error),
    #[error("residues must be square matrices of one size, one per point")]
    Shape,
    #[error("singular point {0} is repeated")]
    RepeatedPoint(String),
    #[error("convolution parameter is zero")]
    ZeroParameter,
    #[error("subspace is not invariant under the residue at point {0}")]
    NotInvariant(usize),
    #[error("the two invariant subspaces intersect")]
    Overlap,
    #[error("expected a two-dimensional quotient, got dimension {0}")]
    NotTwoDimensional(usize),
    #[error("{0} is not an eigenvalue of the sum of residues")]
    NotAnEigenvalue(String),
}

pub type Result<T> = std::result::Result<T, Error>;

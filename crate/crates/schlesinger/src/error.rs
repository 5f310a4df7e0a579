use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] painleve_core::Error),
    #[error("residues must be constant 2x2 matrices")]
    BadResidue,
    #[error("expected three finite singular points, found {0}")]
    SingularCount(usize),
    #[error("pole of order {order} at z = {point}")]
    HigherOrderPole { point: String, order: usize },
    #[error("coefficient matrix has a nonzero polynomial part")]
    PolynomialPart,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("theta_4 = 1: the residue at infinity is not diagonalizable in the required form")]
    ThetaFourIsOne,
    #[error("system is not normalized: {0}")]
    NotNormalized(String),
    #[error("eigenvalues of the residue at infinity are not rational: {0}")]
    IrrationalEigenvalue(String),
    #[error("{0} is not an eigenvalue of the residue at infinity")]
    NotAnEigenvalue(String),
    #[error("the upper right entry vanishes identically")]
    ZeroOffDiagonal,
    #[error("no apparent singularity in the first coordinate")]
    NoApparentPoint,
    #[error("apparent singularity coincides with the singular point {0}")]
    ApparentCollision(String),
    #[error("shift at infinity; express it through the finite points")]
    ShiftAtInfinity,
    #[error("{0} is not a singular point of the system")]
    ShiftNotSingular(String),
    #[error("rebuilt system differs from the input: {0}")]
    Inconsistent(String),
    #[error("malformed Schlesinger file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("both polynomials are constant in variable {0}")]
    ConstantInVariable(usize),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial has non-real coefficients")]
    NonRealCoefficients,

    #[error("matrix {index} is not Hermitian")]
    NotHermitian { index: usize },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("unsupported number of variables {0} for this operation")]
    UnsupportedDimension(usize),

    #[error("direction is not a hyperbolicity direction: {0}")]
    NotHyperbolicDirection(String),

    #[error("numeric iteration did not converge: {0}")]
    NoConvergence(String),

    #[error("no exact route for this input: {0}")]
    NoExactRoute(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

use thiserror::Error;

use crate::linalg::Rational;

/// Errors raised by the library. Precondition failures are distinguished from
/// certification failures so callers (and the CLI exit-code contract) can tell
/// them apart.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("invalid interval: lower end {a} is not below upper end {b}")]
    InvalidInterval { a: Rational, b: Rational },

    #[error("path is not admissible: determinant vanishes at endpoint {at}")]
    InadmissiblePath { at: Rational },

    #[error("path is identically singular (determinant is the zero polynomial)")]
    IdenticallySingular,

    #[error("eigenvalue {at} is not transversal for any order up to the path degree")]
    NotTransversal { at: Rational },

    #[error("eigenvalue could not be isolated from the rest of the spectrum")]
    NotIsolated,

    #[error("multiplicity is infinite")]
    InfiniteMultiplicity,

    #[error("split point {at} is an eigenvalue of the path")]
    SplitAtEigenvalue { at: Rational },

    #[error("homotopy is not admissible: endpoint {endpoint} is singular for some t in [0,1]")]
    InadmissibleHomotopy { endpoint: Rational },

    #[error("operator is singular")]
    SingularOperator,

    #[error("reference operator is singular")]
    SingularReference,

    #[error("orientation is trivial (no invertible operator to anchor it)")]
    DegenerateOrientation,

    #[error("zero with possibly singular Jacobian near {near}")]
    IrregularZero { near: String },

    #[error("could not certify that the map has no zero on the boundary of the domain")]
    BoundaryZero,

    #[error("zeros could not be separated at the minimum box width near {near}")]
    ResolutionExceeded { near: String },

    #[error("could not certify a positive boundary margin for the regular-value perturbation")]
    MarginUnderflow,

    #[error("degree disagreement between regular values: {first} vs {second}")]
    Disagreement { first: i64, second: i64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures that reflect a violated input precondition rather
    /// than a broken internal identity.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::Disagreement { .. })
    }
}

//! Exact generalized algebraic multiplicity, parity, orientation and
//! topological degree for polynomial operator paths and polynomial maps.

// Errors carry the offending exact rationals; they are rare and cold.
#![allow(clippy::result_large_err)]

pub mod degree;
pub mod error;
pub mod format;
pub mod linalg;
pub mod multiplicity;
pub mod orientation;
pub mod parity;
pub mod paths;
pub mod random;
pub mod sign;
pub mod verify;

pub use error::{Error, Result};
pub use format::{Problem, ProblemFile};
pub use linalg::{Matrix, Poly, Rational};
pub use multiplicity::Chi;
pub use orientation::Orientation;
pub use paths::{AdmissiblePath, BivariatePath, Interval, PolyMatrixPath};
pub use sign::Sign;
pub use verify::{Campaign, CheckName, Report};

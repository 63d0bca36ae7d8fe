//! Exact rational linear algebra: scalars, dense matrices, univariate
//! polynomials, determinants of polynomial matrices and certified real roots.

mod matrix;
mod poly;
mod polydet;
mod rational;
mod roots;

pub use matrix::Matrix;
pub use poly::Poly;
pub use polydet::{combinations, poly_matrix_det, poly_minor};
pub use rational::{
    ceil_dyadic, common_denominator, dyadic_unit, floor_dyadic, format_rational, from_f64, int,
    parse_rational, ratio, simplest_between, to_f64, Rational,
};
pub use roots::{
    count_distinct_closed, count_distinct_open, count_with_multiplicity_open, real_roots_in,
    real_roots_in_with_width, sign_variations, sturm_chain, RealRoot, RootLocation,
    DEFAULT_ISOLATION_BITS,
};

use crate::paths::PolyMatrixPath;

/// Exact determinant of `L(λ)` as a polynomial in `λ`.
pub fn det_poly(path: &PolyMatrixPath) -> Poly {
    poly_matrix_det(path.entry_polys())
}

/// Exact rank over the rationals.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// Exact basis of the null space.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

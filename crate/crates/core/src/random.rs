//! Seeded generators for random rational data.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::linalg::{ratio, Matrix, Rational};

/// Numerators are drawn from `[-numerator, numerator]` and denominators from
/// `[1, denominator]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientBounds {
    pub numerator: i64,
    pub denominator: i64,
}

impl Default for CoefficientBounds {
    fn default() -> Self {
        CoefficientBounds {
            numerator: 9,
            denominator: 4,
        }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// An independent stream per `(seed, stream, index)`, so instances can be
/// generated in any order.
pub fn stream_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let s = splitmix(splitmix(splitmix(seed) ^ stream) ^ index);
    ChaCha8Rng::seed_from_u64(s)
}

pub fn random_rational(rng: &mut impl Rng, bounds: CoefficientBounds) -> Rational {
    let n = rng.gen_range(-bounds.numerator..=bounds.numerator);
    let d = rng.gen_range(1..=bounds.denominator.max(1));
    ratio(n, d)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, bounds: CoefficientBounds) -> Matrix {
    Matrix::from_fn(n, n, |_, _| random_rational(rng, bounds))
}

/// Rejection-samples until the determinant is nonzero.
pub fn random_invertible_matrix(rng: &mut impl Rng, n: usize, bounds: CoefficientBounds) -> Matrix {
    loop {
        let m = random_matrix(rng, n, bounds);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

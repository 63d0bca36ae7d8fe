//! Random corpus generators for campaigns.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::{int, ratio, Matrix, Poly, Rational};
use crate::paths::{Interval, PolyMatrixPath};
use crate::random::{random_rational, CoefficientBounds};

/// What a generated path must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathRequest {
    Any,
    /// Invertible at both ends of the interval.
    Admissible(Interval),
    /// Pre-multiplied by `diag(λ, 1, ..., 1)`, so `χ[L; 0] >= 1`.
    SingularAtZero,
}

const MAX_REJECTIONS: usize = 10_000;

fn random_coefficients(
    rng: &mut impl Rng,
    n: usize,
    degree: usize,
    bounds: CoefficientBounds,
) -> PolyMatrixPath {
    let coeffs = (0..=degree)
        .map(|_| Matrix::from_fn(n, n, |_, _| random_rational(rng, bounds)))
        .collect();
    PolyMatrixPath::new(coeffs).expect("coefficients share a shape")
}

/// A random `n × n` path of degree at most `degree`.
pub fn generate_random_path(
    rng: &mut impl Rng,
    n: usize,
    degree: usize,
    bounds: CoefficientBounds,
    request: &PathRequest,
) -> PolyMatrixPath {
    match request {
        PathRequest::Any => random_coefficients(rng, n, degree, bounds),
        PathRequest::Admissible(iv) => {
            for _ in 0..MAX_REJECTIONS {
                let p = random_coefficients(rng, n, degree, bounds);
                if !p.det_at(iv.a()).is_zero() && !p.det_at(iv.b()).is_zero() {
                    return p;
                }
            }
            // Unreachable for any sane bounds: the identity is admissible.
            PolyMatrixPath::identity(n)
        }
        PathRequest::SingularAtZero => {
            let p = random_coefficients(rng, n, degree, bounds);
            let mut diag = vec![Poly::one(); n];
            diag[0] = Poly::x();
            PolyMatrixPath::diagonal(&diag)
                .compose(&p)
                .expect("same dimension")
        }
    }
}

/// A matrix similar to a Jordan form with known blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSeed {
    pub matrix: Matrix,
    /// `(eigenvalue, block size)` in construction order.
    pub blocks: Vec<(Rational, usize)>,
}

impl JordanSeed {
    /// Ground-truth algebraic multiplicities, sorted by eigenvalue.
    pub fn multiplicities(&self) -> Vec<(Rational, usize)> {
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for (mu, size) in &self.blocks {
            match out.iter_mut().find(|(m, _)| m == mu) {
                Some(entry) => entry.1 += size,
                None => out.push((mu.clone(), *size)),
            }
        }
        out.sort();
        out
    }

    pub fn multiplicity_of(&self, mu: &Rational) -> usize {
        self.blocks
            .iter()
            .filter(|(m, _)| m == mu)
            .map(|(_, s)| s)
            .sum()
    }
}

/// `J_{s_1}(μ_1) ⊕ ... ⊕ J_{s_r}(μ_r)`.
pub fn jordan_matrix(blocks: &[(Rational, usize)]) -> Matrix {
    let n = blocks.iter().map(|(_, s)| s).sum();
    let mut m = Matrix::zeros(n, n);
    let mut at = 0;
    for (mu, size) in blocks {
        for i in 0..*size {
            m[(at + i, at + i)] = mu.clone();
            if i + 1 < *size {
                m[(at + i, at + i + 1)] = int(1);
            }
        }
        at += size;
    }
    m
}

/// A random integer matrix with determinant `±1`, as a product of elementary
/// row additions and a permutation, together with its inverse.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> (Matrix, Matrix) {
    let mut u = Matrix::identity(n);
    if n > 1 {
        for _ in 0..2 * n {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = int(rng.gen_range(-2..=2));
            for k in 0..n {
                let add = &c * &u[(j, k)];
                u[(i, k)] += add;
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        u = Matrix::from_fn(n, n, |i, k| u[(perm[i], k)].clone());
    }
    let inv = u.inverse().expect("unimodular matrices are invertible");
    (u, inv)
}

/// A random Jordan form on `n` rows (eigenvalues `p/q` with `|p| <= 4`,
/// `q <= 2`, drawn from a small pool so that blocks share eigenvalues),
/// conjugated by a random unimodular integer matrix.
pub fn generate_jordan_seed(rng: &mut impl Rng, n: usize) -> JordanSeed {
    let pool_size = rng.gen_range(1..=n.max(1));
    let pool: Vec<Rational> = (0..pool_size)
        .map(|_| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2)))
        .collect();
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        let mu = pool[rng.gen_range(0..pool.len())].clone();
        blocks.push((mu, size));
        left -= size;
    }
    let (u, u_inv) = random_unimodular(rng, n);
    let matrix = &(&u * &jordan_matrix(&blocks)) * &u_inv;
    JordanSeed { matrix, blocks }
}

/// A random rational in the open interval `(a, b)` on a grid of `steps` cells.
pub fn random_interior_point(rng: &mut impl Rng, iv: &Interval, steps: i64) -> Rational {
    let k = rng.gen_range(1..steps);
    iv.a() + iv.width() * ratio(k, steps)
}

/// A random interval `[a, b]` with `a ∈ [-3, 0)` and `b ∈ (0, 3]` in halves.
pub fn random_interval(rng: &mut impl Rng) -> Interval {
    let a = ratio(-rng.gen_range(1..=6), 2);
    let b = ratio(rng.gen_range(1..=6), 2);
    Interval::new(a, b).expect("a < 0 < b")
}

/// A random nonzero integer vector with entries in `[-3, 3]`.
pub fn random_integer_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

//! Polynomial matrix paths `L(λ) = Σ C_j λ^j`, parameter intervals,
//! admissible paths and two-parameter homotopy families.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_poly, Matrix, Poly, Rational};

/// Closed parameter interval `[a, b]` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    a: Rational,
    b: Rational,
}

impl Interval {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a < b {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInterval { a, b })
        }
    }

    pub fn unit() -> Self {
        Interval {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn width(&self) -> Rational {
        &self.b - &self.a
    }

    pub fn midpoint(&self) -> Rational {
        (&self.a + &self.b) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.a <= x && x <= &self.b
    }

    pub fn contains_open(&self, x: &Rational) -> bool {
        &self.a < x && x < &self.b
    }
}

/// A square polynomial matrix family over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrixPath {
    dimension: usize,
    /// `C_0 ... C_d`; trailing zero coefficients are trimmed, keeping at least one.
    coefficients: Vec<Matrix>,
}

impl PolyMatrixPath {
    pub fn new(coefficients: Vec<Matrix>) -> Result<Self> {
        let first = coefficients.first().ok_or(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        })?;
        let n = first.require_square()?;
        for c in &coefficients {
            let m = c.require_square()?;
            if m != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m,
                });
            }
        }
        let mut coefficients = coefficients;
        while coefficients.len() > 1 && coefficients.last().is_some_and(Matrix::is_zero) {
            coefficients.pop();
        }
        Ok(PolyMatrixPath {
            dimension: n,
            coefficients,
        })
    }

    pub fn constant(m: Matrix) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(Matrix::identity(n)).expect("identity is square")
    }

    /// `λ I - K`.
    pub fn shifted_operator(k: &Matrix) -> Result<Self> {
        let n = k.require_square()?;
        Self::new(vec![-k, Matrix::identity(n)])
    }

    /// Diagonal path with the given polynomial entries.
    pub fn diagonal(entries: &[Poly]) -> Self {
        let n = entries.len();
        let mut polys = vec![vec![Poly::zero(); n]; n];
        for (i, p) in entries.iter().enumerate() {
            polys[i][i] = p.clone();
        }
        Self::from_entry_polys(&polys).expect("diagonal path is square")
    }

    /// Builds the path from a square matrix of polynomial entries.
    pub fn from_entry_polys(entries: &[Vec<Poly>]) -> Result<Self> {
        let n = entries.len();
        for row in entries {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
        }
        let degree = entries
            .iter()
            .flatten()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0);
        let coefficients = (0..=degree)
            .map(|k| Matrix::from_fn(n, n, |i, j| entries[i][j].coeff(k)))
            .collect();
        Self::new(coefficients)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Matrix] {
        &self.coefficients
    }

    pub fn entry_polys(&self) -> Vec<Vec<Poly>> {
        let n = self.dimension;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        Poly::new(
                            self.coefficients
                                .iter()
                                .map(|c| c[(i, j)].clone())
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect()
    }

    pub fn eval(&self, lambda: &Rational) -> Matrix {
        let n = self.dimension;
        self.coefficients
            .iter()
            .rev()
            .fold(Matrix::zeros(n, n), |acc, c| &acc.scale(lambda) + c)
    }

    pub fn det_at(&self, lambda: &Rational) -> Rational {
        self.eval(lambda).det().expect("path is square")
    }

    pub fn det_poly(&self) -> Poly {
        det_poly(self)
    }

    /// Coefficients of `L(λ0 + t)` in `t`, i.e. the Taylor coefficients
    /// `L^{(j)}(λ0) / j!`.
    pub fn taylor_at(&self, lambda0: &Rational) -> Vec<Matrix> {
        let n = self.dimension;
        let d = self.coefficients.len();
        let mut out = vec![Matrix::zeros(n, n); d];
        // C_k (λ0 + t)^k = Σ_j binom(k, j) λ0^(k-j) C_k t^j
        for (k, c) in self.coefficients.iter().enumerate() {
            let mut binom = Rational::one();
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let pw = pow_rational(lambda0, (k - j) as u32);
                *slot = &*slot + &c.scale(&(&binom * pw));
                binom = binom * Rational::from_integer((k - j).into())
                    / Rational::from_integer((j + 1).into());
            }
        }
        out
    }

    /// The path recentred at `λ0`: `t ↦ L(λ0 + t)`.
    pub fn recentered(&self, lambda0: &Rational) -> PolyMatrixPath {
        PolyMatrixPath::new(self.taylor_at(lambda0)).expect("same dimension")
    }

    /// Pointwise product `L(λ) M(λ)`.
    pub fn compose(&self, right: &PolyMatrixPath) -> Result<PolyMatrixPath> {
        if self.dimension != right.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: right.dimension,
            });
        }
        let n = self.dimension;
        let mut out =
            vec![Matrix::zeros(n, n); self.coefficients.len() + right.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in right.coefficients.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyMatrixPath::new(out)
    }

    /// `(1 - λ) from + λ to`.
    pub fn segment(from: &Matrix, to: &Matrix) -> Result<PolyMatrixPath> {
        if from.rows() != to.rows() || from.cols() != to.cols() {
            return Err(Error::DimensionMismatch {
                expected: from.rows(),
                found: to.rows(),
            });
        }
        PolyMatrixPath::new(vec![from.clone(), to - from])
    }

    pub fn add(&self, other: &PolyMatrixPath) -> Result<PolyMatrixPath> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        let n = self.dimension;
        let len = self.coefficients.len().max(other.coefficients.len());
        let zero = Matrix::zeros(n, n);
        PolyMatrixPath::new(
            (0..len)
                .map(|k| {
                    let a = self.coefficients.get(k).unwrap_or(&zero);
                    let b = other.coefficients.get(k).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> PolyMatrixPath {
        PolyMatrixPath::new(self.coefficients.iter().map(|c| c.scale(s)).collect())
            .expect("same dimension")
    }

    /// `L(c λ + d)`, an affine reparametrisation.
    pub fn reparametrize(&self, c: &Rational, d: &Rational) -> PolyMatrixPath {
        let n = self.dimension;
        let lin = Poly::new(vec![d.clone(), c.clone()]);
        let mut out = vec![Matrix::zeros(n, n); self.coefficients.len()];
        let mut power = Poly::one();
        for coef in &self.coefficients {
            for (j, pc) in power.coeffs().iter().enumerate() {
                out[j] = &out[j] + &coef.scale(pc);
            }
            power = &power * &lin;
        }
        PolyMatrixPath::new(out).expect("same dimension")
    }
}

fn pow_rational(x: &Rational, e: u32) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

impl std::fmt::Debug for PolyMatrixPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.coefficients.iter()).finish()
    }
}

/// A path with invertible endpoint values on its interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    path: PolyMatrixPath,
    interval: Interval,
}

impl AdmissiblePath {
    pub fn new(path: PolyMatrixPath, interval: Interval) -> Result<Self> {
        for end in [interval.a(), interval.b()] {
            if path.det_at(end).is_zero() {
                return Err(Error::InadmissiblePath { at: end.clone() });
            }
        }
        Ok(AdmissiblePath { path, interval })
    }

    pub fn path(&self) -> &PolyMatrixPath {
        &self.path
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn start(&self) -> Matrix {
        self.path.eval(self.interval.a())
    }

    pub fn end(&self) -> Matrix {
        self.path.eval(self.interval.b())
    }

    /// Restriction to a subinterval (which must itself be admissible).
    pub fn restrict(&self, interval: Interval) -> Result<AdmissiblePath> {
        AdmissiblePath::new(self.path.clone(), interval)
    }
}

/// Two-parameter family `H(t, λ) = Σ_i t^i P_i(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePath {
    dimension: usize,
    t_coefficients: Vec<PolyMatrixPath>,
}

impl BivariatePath {
    pub fn new(t_coefficients: Vec<PolyMatrixPath>) -> Result<Self> {
        let first = t_coefficients.first().ok_or(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        })?;
        let n = first.dimension();
        for p in &t_coefficients {
            if p.dimension() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.dimension(),
                });
            }
        }
        Ok(BivariatePath {
            dimension: n,
            t_coefficients,
        })
    }

    /// `(1 - t) P + t Q`.
    pub fn linear(from: &PolyMatrixPath, to: &PolyMatrixPath) -> Result<Self> {
        let diff = to.add(&from.scale(&-Rational::one()))?;
        Self::new(vec![from.clone(), diff])
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn t_coefficients(&self) -> &[PolyMatrixPath] {
        &self.t_coefficients
    }

    /// The section `λ ↦ H(t, λ)`.
    pub fn section(&self, t: &Rational) -> PolyMatrixPath {
        let mut acc = PolyMatrixPath::constant(Matrix::zeros(self.dimension, self.dimension))
            .expect("square");
        for p in self.t_coefficients.iter().rev() {
            acc = acc.scale(t).add(p).expect("same dimension");
        }
        acc
    }

    /// The path `t ↦ H(t, λ)` at fixed `λ`.
    pub fn at_lambda(&self, lambda: &Rational) -> PolyMatrixPath {
        PolyMatrixPath::new(self.t_coefficients.iter().map(|p| p.eval(lambda)).collect())
            .expect("same dimension")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use proptest::prelude::*;

    fn lambda_times(m: Matrix) -> PolyMatrixPath {
        let n = m.rows();
        PolyMatrixPath::new(vec![Matrix::zeros(n, n), m]).unwrap()
    }

    #[test]
    fn taylor_examples() {
        let id = Matrix::identity(2);
        assert_eq!(
            lambda_times(id.clone()).taylor_at(&int(1)),
            vec![id.clone(), id.clone()]
        );
        let c = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            PolyMatrixPath::constant(c.clone())
                .unwrap()
                .taylor_at(&ratio(5, 3)),
            vec![c]
        );
        let sq = PolyMatrixPath::new(vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2), id.clone()])
            .unwrap();
        assert_eq!(
            sq.taylor_at(&int(1)),
            vec![id.clone(), id.scale(&int(2)), id]
        );
    }

    #[test]
    fn compose_examples() {
        let e = PolyMatrixPath::diagonal(&[Poly::x(), Poly::one()]);
        assert_eq!(
            e.compose(&e).unwrap(),
            PolyMatrixPath::diagonal(&[Poly::from_ints(&[0, 0, 1]), Poly::one()])
        );
        let p = PolyMatrixPath::new(vec![
            Matrix::from_ints(&[&[1, 2], &[0, 1]]),
            Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        ])
        .unwrap();
        assert_eq!(PolyMatrixPath::identity(2).compose(&p).unwrap(), p);
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[5, -1]]);
        let ab = PolyMatrixPath::constant(a.clone())
            .unwrap()
            .compose(&PolyMatrixPath::constant(b.clone()).unwrap())
            .unwrap();
        assert_eq!(ab, PolyMatrixPath::constant(&a * &b).unwrap());
        assert!(PolyMatrixPath::identity(2)
            .compose(&PolyMatrixPath::identity(3))
            .is_err());
    }

    #[test]
    fn segment_examples() {
        let id = Matrix::identity(2);
        assert_eq!(
            PolyMatrixPath::segment(&id, &id).unwrap(),
            PolyMatrixPath::identity(2)
        );
        let s = PolyMatrixPath::segment(&id, &-&id).unwrap();
        assert_eq!(s.det_poly(), Poly::from_ints(&[1, -2]).pow(2));
        assert!(s.det_at(&ratio(1, 2)).is_zero());
        let s = PolyMatrixPath::segment(&id, &Matrix::from_ints(&[&[1, 0], &[0, 3]])).unwrap();
        assert_eq!(s.det_poly(), Poly::from_ints(&[1, 2]));
        assert!(PolyMatrixPath::segment(&id, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn admissibility_checked_at_construction() {
        let e = PolyMatrixPath::diagonal(&[Poly::x(), Poly::one()]);
        assert!(AdmissiblePath::new(e.clone(), Interval::new(int(-1), int(1)).unwrap()).is_ok());
        assert_eq!(
            AdmissiblePath::new(e, Interval::new(int(0), int(1)).unwrap()),
            Err(Error::InadmissiblePath { at: int(0) })
        );
        assert!(Interval::new(int(1), int(1)).is_err());
    }

    #[test]
    fn bivariate_sections() {
        // H(t, λ) = diag(λ - t/2, 1)
        let h = BivariatePath::new(vec![
            PolyMatrixPath::diagonal(&[Poly::x(), Poly::one()]),
            PolyMatrixPath::diagonal(&[Poly::constant(ratio(-1, 2)), Poly::zero()]),
        ])
        .unwrap();
        assert_eq!(
            h.section(&int(1)),
            PolyMatrixPath::diagonal(&[Poly::new(vec![ratio(-1, 2), int(1)]), Poly::one()])
        );
        assert_eq!(
            h.at_lambda(&int(1)).det_poly(),
            Poly::new(vec![int(1), ratio(-1, 2)])
        );
    }

    fn small_path() -> impl Strategy<Value = PolyMatrixPath> {
        (1usize..4, 0usize..3).prop_flat_map(|(n, d)| {
            proptest::collection::vec(-3i64..=3, n * n * (d + 1)).prop_map(move |v| {
                PolyMatrixPath::new(
                    (0..=d)
                        .map(|k| Matrix::from_fn(n, n, |i, j| int(v[k * n * n + i * n + j])))
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn recentering_round_trips(p in small_path(), c in -3i64..3, d in 1i64..3) {
            let x = ratio(c, d);
            let back = PolyMatrixPath::new(p.recentered(&x).taylor_at(&-x)).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn det_of_composition_is_product(p in small_path(), seed in small_path()) {
            prop_assume!(p.dimension() == seed.dimension());
            let lhs = p.compose(&seed).unwrap().det_poly();
            prop_assert_eq!(lhs, &p.det_poly() * &seed.det_poly());
        }

        #[test]
        fn segment_endpoints_exact(p in small_path(), q in small_path()) {
            prop_assume!(p.dimension() == q.dimension());
            let (a, b) = (p.coefficients()[0].clone(), q.coefficients()[0].clone());
            let s = PolyMatrixPath::segment(&a, &b).unwrap();
            prop_assert_eq!(s.eval(&int(0)), a);
            prop_assert_eq!(s.eval(&int(1)), b);
        }
    }
}

//! Generalized algebraic multiplicity of polynomial operator paths.
//!
//! The multiplicity χ at an eigenvalue is computed three independent ways:
//!
//! * as the order of vanishing of `det L(λ)` (the authoritative route, total
//!   on all paths, with `Chi::Infinite` when the determinant is identically zero);
//! * as the sum of the local Smith-form partial multiplicities, read off from
//!   the determinantal divisors (gcds of the `k x k` minors);
//! * through the transversal-eigenvalue formula `Σ j · dim L_j(∩_{i<j} Ker L_i)`
//!   whenever the eigenvalue is `k`-transversal without pre-composition.
//!
//! Eigenvalues need not be rational: an irrational eigenvalue is handled
//! through its square-free factor and an isolating interval, without
//! algebraic-number arithmetic.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    combinations, count_distinct_closed, count_distinct_open, poly_minor, real_roots_in, to_f64,
    Matrix, Poly, Rational, RootLocation,
};
use crate::paths::{Interval, PolyMatrixPath};

/// χ ∈ ℕ ∪ {∞}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chi {
    Finite(usize),
    Infinite,
}

impl Chi {
    pub fn finite(self) -> Option<usize> {
        match self {
            Chi::Finite(n) => Some(n),
            Chi::Infinite => None,
        }
    }
}

impl fmt::Display for Chi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chi::Finite(n) => write!(f, "{n}"),
            Chi::Infinite => write!(f, "INFINITE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityResult {
    pub chi: Chi,
    /// Local Smith partial multiplicities `d_1 <= ... <= d_N`.
    pub partial_multiplicities: Vec<usize>,
    /// Algebraic eigenvalue order `k = d_N`.
    pub order_k: usize,
    /// Present iff the eigenvalue is `k`-transversal as given.
    pub transversal_k: Option<usize>,
}

/// A point at which local invariants are evaluated: an exact rational, or an
/// irrational root pinned by a square-free factor and an isolating interval
/// holding no other root of that factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectralPoint {
    Rational(Rational),
    Algebraic {
        factor: Poly,
        lo: Rational,
        hi: Rational,
    },
}

impl SpectralPoint {
    pub fn from_location(location: &RootLocation, factor: &Poly) -> Self {
        match location {
            RootLocation::Exact(r) => SpectralPoint::Rational(r.clone()),
            RootLocation::Isolated { lo, hi } => SpectralPoint::Algebraic {
                factor: factor.clone(),
                lo: lo.clone(),
                hi: hi.clone(),
            },
        }
    }

    /// Order of vanishing of a nonzero polynomial at this point.
    pub fn order_of(&self, g: &Poly) -> usize {
        match self {
            SpectralPoint::Rational(r) => g.order_at(r),
            SpectralPoint::Algebraic { factor, lo, hi } => {
                // Each division by gcd(g, factor) strips one power of every
                // irreducible factor shared with the square-free `factor`.
                let mut g = g.clone();
                let mut e = 0;
                loop {
                    let common = g.gcd(factor);
                    if common.degree().unwrap_or(0) == 0
                        || count_distinct_open(&common, lo, hi) == 0
                    {
                        return e;
                    }
                    g = g.exact_div(&common);
                    e += 1;
                }
            }
        }
    }
}

/// Order of vanishing of `det L` at `λ0`; infinite iff the determinant is identically zero.
pub fn chi_det(path: &PolyMatrixPath, lambda0: &Rational) -> Chi {
    let det = path.det_poly();
    if det.is_zero() {
        Chi::Infinite
    } else {
        Chi::Finite(det.order_at(lambda0))
    }
}

/// Determinantal divisors `D_1, ..., D_N`: `D_k` is the monic gcd of all
/// `k x k` minors. Invariant factors are the ratios `D_k / D_{k-1}`.
pub fn determinantal_divisors(path: &PolyMatrixPath) -> Vec<Poly> {
    let entries = path.entry_polys();
    let n = path.dimension();
    (1..=n)
        .map(|k| {
            let subsets = combinations(n, k);
            let mut g = Poly::zero();
            'outer: for rows in &subsets {
                for cols in &subsets {
                    g = g.gcd(&poly_minor(&entries, rows, cols));
                    if g.degree() == Some(0) {
                        break 'outer;
                    }
                }
            }
            g
        })
        .collect()
}

/// Local Smith data of a path, computed once and queried at many points.
#[derive(Clone, Debug)]
pub struct SmithProfile {
    divisors: Vec<Poly>,
}

impl SmithProfile {
    pub fn new(path: &PolyMatrixPath) -> Result<Self> {
        let divisors = determinantal_divisors(path);
        if divisors.last().is_some_and(Poly::is_zero) {
            return Err(Error::IdenticallySingular);
        }
        Ok(SmithProfile { divisors })
    }

    pub fn divisors(&self) -> &[Poly] {
        &self.divisors
    }

    /// Monic invariant factors `s_k = D_k / D_{k-1}`.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        let mut prev = Poly::one();
        self.divisors
            .iter()
            .map(|d| {
                let s = d.exact_div(&prev);
                prev = d.clone();
                s
            })
            .collect()
    }

    /// Ascending partial multiplicities at the point.
    pub fn partial_multiplicities(&self, point: &SpectralPoint) -> Vec<usize> {
        let mut prev = 0;
        self.divisors
            .iter()
            .map(|d| {
                let o = point.order_of(d);
                let di = o - prev;
                prev = o;
                di
            })
            .collect()
    }

    pub fn local_result(&self, path: &PolyMatrixPath, point: &SpectralPoint) -> MultiplicityResult {
        let partial = self.partial_multiplicities(point);
        let transversal_k = match point {
            SpectralPoint::Rational(r) => is_k_transversal(path, r).map(|t| t.k),
            SpectralPoint::Algebraic { .. } => None,
        };
        MultiplicityResult {
            chi: Chi::Finite(partial.iter().sum()),
            order_k: partial.last().copied().unwrap_or(0),
            partial_multiplicities: partial,
            transversal_k,
        }
    }
}

/// χ and partial multiplicities from the local Smith form at `λ0`.
pub fn chi_smith(path: &PolyMatrixPath, lambda0: &Rational) -> Result<MultiplicityResult> {
    let profile = SmithProfile::new(path)?;
    Ok(profile.local_result(path, &SpectralPoint::Rational(lambda0.clone())))
}

/// Witness of `k`-transversality: the order `k` and `dims[j-1] = dim L_j(∩_{i<j} Ker L_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversality {
    pub k: usize,
    pub dims: Vec<usize>,
}

/// Finds the least `k <= degree` such that
/// `L_1(W_1) ⊕ ... ⊕ L_k(W_k) ⊕ R(L_0) = Y` with `L_k(W_k) ≠ 0`,
/// where `W_j = ∩_{i<j} Ker L_i` and `L_j` are the Taylor coefficients at `λ0`.
/// Returns `None` when `L(λ0)` is invertible or no such `k` exists.
pub fn is_k_transversal(path: &PolyMatrixPath, lambda0: &Rational) -> Option<Transversality> {
    let n = path.dimension();
    let taylor = path.taylor_at(lambda0);
    let l0 = &taylor[0];
    if l0.rank() == n {
        return None;
    }
    let zero = Matrix::zeros(n, n);
    let mut spanning: Vec<Vec<Rational>> = l0.column_space_basis();
    let mut total = spanning.len();
    // Basis of W_j as columns; W_1 = Ker L_0.
    let mut w = l0.kernel_basis();
    let mut dims = Vec::new();
    for j in 1..=path.degree() {
        let lj = taylor.get(j).unwrap_or(&zero);
        let image = if w.is_empty() {
            Vec::new()
        } else {
            lj.try_mul(&Matrix::from_columns(n, &w))
                .expect("square")
                .column_space_basis()
        };
        dims.push(image.len());
        total += image.len();
        spanning.extend(image);
        let direct = Matrix::from_columns(n, &spanning).rank() == total;
        if !direct {
            return None;
        }
        if total == n && dims[j - 1] > 0 {
            return Some(Transversality { k: j, dims });
        }
        // W_{j+1} = W_j ∩ Ker L_j.
        if !w.is_empty() {
            let wm = Matrix::from_columns(n, &w);
            let coords = lj.try_mul(&wm).expect("square").kernel_basis();
            w = coords.iter().map(|c| wm.mul_vec(c)).collect();
        }
    }
    None
}

/// χ through the transversal-eigenvalue formula `Σ j · dims_j`.
pub fn chi_transversal(path: &PolyMatrixPath, lambda0: &Rational) -> Result<usize> {
    let t = is_k_transversal(path, lambda0).ok_or_else(|| Error::NotTransversal {
        at: lambda0.clone(),
    })?;
    Ok(t.dims.iter().enumerate().map(|(i, d)| (i + 1) * d).sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalMultiplicity {
    pub malg: usize,
    pub ascent: usize,
}

/// Classical algebraic multiplicity `dim Ker (μI - K)^ν` at the ascent `ν`,
/// the least `ν >= 1` with `Ker (μI - K)^ν = Ker (μI - K)^{ν+1}`.
pub fn malg_classical(k: &Matrix, mu: &Rational) -> Result<ClassicalMultiplicity> {
    let n = k.require_square()?;
    let a = &Matrix::identity(n).scale(mu) - k;
    let mut power = a.clone();
    let mut nullity = n - power.rank();
    let mut nu = 1;
    loop {
        let next = &power * &a;
        let next_nullity = n - next.rank();
        if next_nullity == nullity {
            return Ok(ClassicalMultiplicity {
                malg: nullity,
                ascent: nu,
            });
        }
        power = next;
        nullity = next_nullity;
        nu += 1;
    }
}

/// Order `k` of `λ0` as an algebraic eigenvalue: the largest partial multiplicity.
pub fn algebraic_order(path: &PolyMatrixPath, lambda0: &Rational) -> Result<usize> {
    Ok(chi_smith(path, lambda0)?.order_k)
}

/// Numeric cross-check of the blow-up rate `‖L^{-1}(λ)‖ ~ |λ - λ0|^{-k}`.
#[derive(Clone, Debug)]
pub struct OrderCrossCheck {
    pub k: usize,
    pub offsets: Vec<f64>,
    /// `‖L^{-1}(λ0 + h)‖ · h^k` per offset.
    pub scaled_norms: Vec<f64>,
    /// Products stay within a bounded band as `h` shrinks.
    pub bounded: bool,
    /// With exponent `k - 1` the products grow without bound (`None` when `k = 0`).
    pub lower_exponent_diverges: Option<bool>,
}

impl OrderCrossCheck {
    pub fn passed(&self) -> bool {
        self.bounded && self.lower_exponent_diverges.unwrap_or(true)
    }
}

/// Samples `‖L^{-1}(λ0 + h)‖_∞ h^k` at `h = δ/4, δ/8, ...` where `δ` is a
/// certified isolation radius of `λ0`; inverses are exact, norms are floats.
pub fn algebraic_order_crosscheck(
    path: &PolyMatrixPath,
    lambda0: &Rational,
    samples: usize,
) -> Result<OrderCrossCheck> {
    let k = algebraic_order(path, lambda0)?;
    let det = path.det_poly();
    let delta = isolation_radius(&det, lambda0)?;
    let mut h = delta / Rational::from_integer(4.into());
    let mut offsets = Vec::new();
    let mut scaled = Vec::new();
    let mut lower = Vec::new();
    for _ in 0..samples.max(2) {
        let inv = path.eval(&(lambda0 + &h)).inverse()?;
        let norm = inv.norm_inf_f64();
        let hf = to_f64(&h);
        offsets.push(hf);
        scaled.push(norm * hf.powi(k as i32));
        if k > 0 {
            lower.push(norm * hf.powi(k as i32 - 1));
        }
        h /= Rational::from_integer(2.into());
    }
    let (lo, hi) = scaled
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
    let bounded = lo > 0.0 && hi / lo <= 4.0;
    let lower_exponent_diverges = (k > 0).then(|| {
        let growth = lower.last().unwrap() / lower.first().unwrap();
        growth >= (1u64 << (lower.len() - 1)) as f64 / 4.0
    });
    Ok(OrderCrossCheck {
        k,
        offsets,
        scaled_norms: scaled,
        bounded,
        lower_exponent_diverges,
    })
}

/// A power of two `δ <= 1` such that `det` has no root in
/// `[λ0 - δ, λ0 + δ]` other than `λ0` itself. The nearest other root is at
/// distance in `(δ, 2δ]` unless `δ = 1`.
pub fn isolation_radius(det: &Poly, lambda0: &Rational) -> Result<Rational> {
    if det.is_zero() {
        return Err(Error::InfiniteMultiplicity);
    }
    let mut rest = det.clone();
    if rest.eval(lambda0).is_zero() {
        let order = rest.order_at(lambda0);
        rest = rest.exact_div(&Poly::linear_root(lambda0).pow(order as u32));
    }
    let mut delta = Rational::one();
    for _ in 0..4096 {
        if count_distinct_closed(&rest, &(lambda0 - &delta), &(lambda0 + &delta)) == 0 {
            return Ok(delta);
        }
        delta /= Rational::from_integer(2.into());
    }
    Err(Error::NotIsolated)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub location: RootLocation,
    /// Square-free factor of `det L` vanishing at the eigenvalue.
    pub factor: Poly,
    pub result: MultiplicityResult,
}

impl Eigenvalue {
    pub fn point(&self) -> SpectralPoint {
        SpectralPoint::from_location(&self.location, &self.factor)
    }

    pub fn is_rational(&self) -> bool {
        self.location.exact().is_some()
    }
}

/// Eigenvalues of a path in a closed interval, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Spectrum {
    pub eigenvalues: Vec<Eigenvalue>,
}

impl Spectrum {
    pub fn total_chi(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter_map(|e| e.result.chi.finite())
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// All eigenvalues of `path` in the closed interval, each with χ from the
/// determinant order and local Smith partial multiplicities. Rational
/// eigenvalues additionally carry the transversality order when it exists.
pub fn spectrum(path: &PolyMatrixPath, interval: &Interval) -> Result<Spectrum> {
    let det = path.det_poly();
    if det.is_zero() {
        return Err(Error::IdenticallySingular);
    }
    let roots = real_roots_in(&det, interval)?;
    let needs_smith = !roots.is_empty();
    let profile = if needs_smith {
        Some(SmithProfile::new(path)?)
    } else {
        None
    };
    let eigenvalues = roots
        .into_iter()
        .map(|root| {
            let point = SpectralPoint::from_location(&root.location, &root.factor);
            let mut result = profile
                .as_ref()
                .expect("profile computed when roots exist")
                .local_result(path, &point);
            // χ is authoritative from the determinant; Smith must agree.
            debug_assert_eq!(result.chi, Chi::Finite(root.multiplicity));
            result.chi = Chi::Finite(root.multiplicity);
            Eigenvalue {
                location: root.location,
                factor: root.factor,
                result,
            }
        })
        .collect();
    Ok(Spectrum { eigenvalues })
}

/// The normalizing path `(λ - λ0) P + I - P` for a rank-one projection `P`.
pub fn rank_one_normalizer(projection: &Matrix, lambda0: &Rational) -> Result<PolyMatrixPath> {
    let n = projection.require_square()?;
    let id = Matrix::identity(n);
    let c0 = &(&id - projection) - &projection.scale(lambda0);
    PolyMatrixPath::new(vec![c0, projection.clone()])
}

/// Rank-one projection `u vᵀ / (vᵀ u)`; requires `vᵀ u ≠ 0`.
pub fn rank_one_projection(u: &[Rational], v: &[Rational]) -> Result<Matrix> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    let s: Rational = u.iter().zip(v).map(|(a, b)| a * b).sum();
    if s.is_zero() {
        return Err(Error::SingularOperator);
    }
    let n = u.len();
    Ok(Matrix::from_fn(n, n, |i, j| &u[i] * &v[j] / &s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    fn diag(entries: &[Poly]) -> PolyMatrixPath {
        PolyMatrixPath::diagonal(entries)
    }

    fn nilpotent_shift() -> PolyMatrixPath {
        PolyMatrixPath::shifted_operator(&Matrix::from_ints(&[&[0, 1], &[0, 0]])).unwrap()
    }

    #[test]
    fn chi_det_examples() {
        let l0 = ratio(3, 2);
        let e = diag(&[Poly::linear_root(&l0), Poly::one(), Poly::one()]);
        assert_eq!(chi_det(&e, &l0), Chi::Finite(1));
        let c = PolyMatrixPath::constant(Matrix::from_ints(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(chi_det(&c, &int(7)), Chi::Finite(0));
        assert_eq!(chi_det(&nilpotent_shift(), &int(0)), Chi::Finite(2));
        let singular = diag(&[Poly::x(), Poly::zero()]);
        assert_eq!(chi_det(&singular, &int(0)), Chi::Infinite);
    }

    #[test]
    fn chi_smith_examples() {
        let r = chi_smith(&diag(&[Poly::x(), Poly::x()]), &int(0)).unwrap();
        assert_eq!(
            (r.partial_multiplicities.clone(), r.chi),
            (vec![1, 1], Chi::Finite(2))
        );
        assert_eq!(r.order_k, 1);
        let r = chi_smith(&diag(&[Poly::from_ints(&[0, 0, 1]), Poly::one()]), &int(0)).unwrap();
        assert_eq!(
            (r.partial_multiplicities.clone(), r.chi),
            (vec![0, 2], Chi::Finite(2))
        );
        let r = chi_smith(&PolyMatrixPath::identity(3), &int(0)).unwrap();
        assert_eq!(
            (r.partial_multiplicities, r.chi),
            (vec![0, 0, 0], Chi::Finite(0))
        );
        assert_eq!(
            chi_smith(&diag(&[Poly::zero(), Poly::one()]), &int(0)),
            Err(Error::IdenticallySingular)
        );
        // Jordan block: d = [0, 2]
        let r = chi_smith(&nilpotent_shift(), &int(0)).unwrap();
        assert_eq!(r.partial_multiplicities, vec![0, 2]);
    }

    #[test]
    fn transversal_examples() {
        let l0 = int(2);
        let e = diag(&[Poly::linear_root(&l0), Poly::one()]);
        assert_eq!(
            is_k_transversal(&e, &l0),
            Some(Transversality {
                k: 1,
                dims: vec![1]
            })
        );
        assert_eq!(chi_transversal(&e, &l0), Ok(1));
        assert_eq!(
            is_k_transversal(&PolyMatrixPath::identity(2), &int(0)),
            None
        );
        let dd = diag(&[Poly::x(), Poly::x()]);
        assert_eq!(
            is_k_transversal(&dd, &int(0)),
            Some(Transversality {
                k: 1,
                dims: vec![2]
            })
        );
        assert_eq!(chi_transversal(&dd, &int(0)), Ok(2));
        let d13 = diag(&[Poly::x(), Poly::from_ints(&[0, 0, 0, 1])]);
        let t = is_k_transversal(&d13, &int(0)).unwrap();
        assert_eq!(t.k, 3);
        assert_eq!(chi_transversal(&d13, &int(0)), Ok(4));
        assert_eq!(chi_det(&d13, &int(0)), Chi::Finite(4));
        // λI - J2(0) is not transversal: L_1 = I maps Ker L_0 into R(L_0).
        assert_eq!(
            chi_transversal(&nilpotent_shift(), &int(0)),
            Err(Error::NotTransversal { at: int(0) })
        );
    }

    #[test]
    fn classical_multiplicity_examples() {
        let j = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            malg_classical(&j, &int(0)).unwrap(),
            ClassicalMultiplicity { malg: 2, ascent: 2 }
        );
        assert_eq!(
            malg_classical(&Matrix::identity(4), &int(1)).unwrap(),
            ClassicalMultiplicity { malg: 4, ascent: 1 }
        );
        assert_eq!(malg_classical(&j, &int(5)).unwrap().malg, 0);
    }

    #[test]
    fn algebraic_order_examples() {
        let d2 = diag(&[Poly::from_ints(&[0, 0, 1]), Poly::one()]);
        assert_eq!(algebraic_order(&d2, &int(0)), Ok(2));
        assert_eq!(
            algebraic_order(&diag(&[Poly::x(), Poly::x()]), &int(0)),
            Ok(1)
        );
        assert_eq!(
            algebraic_order(&PolyMatrixPath::identity(2), &int(0)),
            Ok(0)
        );

        let check = algebraic_order_crosscheck(&d2, &int(0), 8).unwrap();
        assert!(check.passed(), "{check:?}");
        let check = algebraic_order_crosscheck(&nilpotent_shift(), &int(0), 8).unwrap();
        assert_eq!(check.k, 2);
        assert!(check.passed(), "{check:?}");
        let check = algebraic_order_crosscheck(&PolyMatrixPath::identity(2), &int(0), 4).unwrap();
        assert!(check.passed());
    }

    #[test]
    fn spectrum_examples() {
        let p = diag(&[Poly::linear_root(&int(1)), Poly::linear_root(&int(2))]);
        let s = spectrum(&p, &Interval::new(int(0), int(3)).unwrap()).unwrap();
        let got: Vec<_> = s
            .eigenvalues
            .iter()
            .map(|e| (e.location.clone(), e.result.chi))
            .collect();
        assert_eq!(
            got,
            vec![
                (RootLocation::Exact(int(1)), Chi::Finite(1)),
                (RootLocation::Exact(int(2)), Chi::Finite(1))
            ]
        );
        let c = PolyMatrixPath::constant(Matrix::identity(2)).unwrap();
        assert!(spectrum(&c, &Interval::unit()).unwrap().is_empty());
        let l0 = ratio(1, 3);
        let e = diag(&[Poly::linear_root(&l0), Poly::one()]);
        let s = spectrum(&e, &Interval::new(&l0 - int(1), &l0 + int(1)).unwrap()).unwrap();
        assert_eq!(s.eigenvalues.len(), 1);
        assert_eq!(s.eigenvalues[0].location, RootLocation::Exact(l0));
        assert_eq!(s.eigenvalues[0].result.chi, Chi::Finite(1));
    }

    #[test]
    fn irrational_eigenvalue_partial_multiplicities() {
        // diag(λ²-2, (λ²-2)²) has partial multiplicities [1, 2] at ±√2.
        let q = Poly::from_ints(&[-2, 0, 1]);
        let p = diag(&[q.clone(), q.pow(2)]);
        let s = spectrum(&p, &Interval::new(int(0), int(2)).unwrap()).unwrap();
        assert_eq!(s.eigenvalues.len(), 1);
        let ev = &s.eigenvalues[0];
        assert!(!ev.is_rational());
        assert_eq!(ev.result.partial_multiplicities, vec![1, 2]);
        assert_eq!(ev.result.chi, Chi::Finite(3));
    }

    #[test]
    fn normalizer_has_unit_multiplicity() {
        let p = rank_one_projection(&[int(1), int(2)], &[int(3), int(-1)]).unwrap();
        assert_eq!(&p * &p, p);
        let e = rank_one_normalizer(&p, &ratio(-1, 2)).unwrap();
        assert_eq!(chi_det(&e, &ratio(-1, 2)), Chi::Finite(1));
        assert_eq!(chi_transversal(&e, &ratio(-1, 2)), Ok(1));
    }

    #[test]
    fn isolation_radius_separates_roots() {
        let det = &Poly::from_ints(&[0, 1]) * &Poly::linear_root(&ratio(1, 3));
        let d = isolation_radius(&det, &int(0)).unwrap();
        assert_eq!(d, ratio(1, 4));
        assert_eq!(
            isolation_radius(&Poly::zero(), &int(0)),
            Err(Error::InfiniteMultiplicity)
        );
    }
}

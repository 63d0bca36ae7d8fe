//! Certified zeros of polynomial maps on boxes.
//!
//! Branch-and-prune over the closed box: interval exclusion (natural and
//! mean-value forms), then a Krawczyk test on a slightly inflated box. A box
//! `X` with `K(X) ⊂ int X` holds exactly one zero and every Jacobian in `X`
//! is invertible; the enclosure is then tightened with `X ← K(X) ∩ X` and
//! probed for an exact rational zero.

use num_traits::{One, Zero};

use super::domain::BoxDomain;
use super::interval::{
    box_contains_point, box_intersect, box_max_width, box_mid, box_subset, interval_det,
    IntervalVector, RatInterval,
};
use super::polymap::PolynomialMap;
use crate::error::{Error, Result};
use crate::linalg::{
    dyadic_unit, format_rational, int, simplest_between, to_f64, Matrix, Rational,
};
use crate::sign::Sign;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Boxes narrower than `scale · 2^-min_width_bits` are not split further.
    pub min_width_bits: u32,
    /// Enclosures are tightened to width `scale · 2^-enclosure_bits`.
    pub enclosure_bits: u32,
    pub max_boxes: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            min_width_bits: 36,
            enclosure_bits: 48,
            max_boxes: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroLocation {
    Exact(Vec<Rational>),
    /// A box holding exactly one zero.
    Enclosure(IntervalVector),
}

impl ZeroLocation {
    /// The exact zero, or the midpoint of its enclosure.
    pub fn representative(&self) -> Vec<Rational> {
        match self {
            ZeroLocation::Exact(p) => p.clone(),
            ZeroLocation::Enclosure(b) => box_mid(b),
        }
    }

    pub fn as_box(&self) -> IntervalVector {
        match self {
            ZeroLocation::Exact(p) => p.iter().cloned().map(RatInterval::point).collect(),
            ZeroLocation::Enclosure(b) => b.clone(),
        }
    }

    pub fn approx(&self) -> Vec<f64> {
        self.representative().iter().map(to_f64).collect()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ZeroLocation::Exact(_))
    }
}

impl std::fmt::Display for ZeroLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZeroLocation::Exact(p) => {
                let parts: Vec<String> = p.iter().map(format_rational).collect();
                write!(f, "({})", parts.join(", "))
            }
            ZeroLocation::Enclosure(_) => {
                let parts: Vec<String> = self.approx().iter().map(|v| format!("{v:.12}")).collect();
                write!(f, "~({})", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularZero {
    pub location: ZeroLocation,
    /// `Df` at the exact zero, or at the enclosure midpoint; invertible, with
    /// the same determinant sign as `Df` at the zero itself.
    pub jacobian: Matrix,
    pub det_sign: Sign,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegularZeroSet {
    pub zeros: Vec<RegularZero>,
}

impl RegularZeroSet {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Interval hull of all zero locations.
    pub fn hull(&self) -> Option<IntervalVector> {
        let mut it = self.zeros.iter().map(|z| z.location.as_box());
        let first = it.next()?;
        Some(it.fold(first, |acc, b| {
            acc.iter().zip(&b).map(|(x, y)| x.hull(y)).collect()
        }))
    }
}

pub fn find_zeros(f: &PolynomialMap, omega: &BoxDomain) -> Result<RegularZeroSet> {
    find_zeros_with(f, omega, &SolverConfig::default())
}

fn pow2(e: i32) -> Rational {
    if e >= 0 {
        Rational::from_integer(num_bigint::BigInt::one() << e as u32)
    } else {
        dyadic_unit((-e) as u32)
    }
}

/// Exponent `e` with `2^(e-1) < w ≤ 2^e`.
fn dyadic_exponent(w: &Rational) -> i32 {
    let mut e = to_f64(w).log2().ceil() as i32;
    while &pow2(e) < w {
        e += 1;
    }
    while &pow2(e - 1) >= w {
        e -= 1;
    }
    e
}

struct Solver<'a> {
    f: &'a PolynomialMap,
    closure: IntervalVector,
    min_width: Rational,
    tolerance: Rational,
    grid_bits: u32,
    max_boxes: usize,
}

enum Krawczyk {
    Excluded,
    Unique {
        region: IntervalVector,
        enclosure: IntervalVector,
    },
    Unknown,
}

struct Found {
    region: IntervalVector,
    enclosure: IntervalVector,
    zero: Option<RegularZero>,
}

pub fn find_zeros_with(
    f: &PolynomialMap,
    omega: &BoxDomain,
    cfg: &SolverConfig,
) -> Result<RegularZeroSet> {
    if f.dimension() != omega.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            found: omega.dimension(),
        });
    }
    let closure = omega.closure();
    let e = dyadic_exponent(&box_max_width(&closure));
    let solver = Solver {
        f,
        min_width: pow2(e - cfg.min_width_bits as i32),
        tolerance: pow2(e - cfg.enclosure_bits as i32),
        grid_bits: (cfg.enclosure_bits as i32 + 24 - e).max(8) as u32,
        max_boxes: cfg.max_boxes,
        closure,
    };
    solver.run(omega)
}

fn describe(b: &[RatInterval]) -> String {
    let parts: Vec<String> = box_mid(b)
        .iter()
        .map(|v| format!("{:.6}", to_f64(v)))
        .collect();
    format!("({})", parts.join(", "))
}

impl Solver<'_> {
    fn run(&self, omega: &BoxDomain) -> Result<RegularZeroSet> {
        let mut stack = vec![self.closure.clone()];
        let mut found: Vec<Found> = Vec::new();
        let mut boxes = 0usize;
        while let Some(x) = stack.pop() {
            boxes += 1;
            if boxes > self.max_boxes {
                return Err(Error::ResolutionExceeded { near: describe(&x) });
            }
            if found.iter().any(|fz| box_subset(&x, &fz.region)) || self.excluded(&x) {
                continue;
            }
            match self.krawczyk(&x, true) {
                Krawczyk::Excluded => continue,
                Krawczyk::Unique { region, enclosure } => {
                    let candidate = self.settle(region, enclosure, omega)?;
                    self.merge(&mut found, candidate)?;
                    continue;
                }
                Krawczyk::Unknown => {}
            }
            if box_max_width(&x) < self.min_width {
                let jd = interval_det(&self.f.jacobian_interval(&x));
                return Err(if jd.contains_zero() {
                    Error::IrregularZero { near: describe(&x) }
                } else {
                    Error::ResolutionExceeded { near: describe(&x) }
                });
            }
            let (lo, hi) = self.bisect(&x);
            stack.push(hi);
            stack.push(lo);
        }
        let mut zeros: Vec<RegularZero> = found.into_iter().filter_map(|fz| fz.zero).collect();
        zeros.sort_by(|a, b| {
            let pa = a.location.representative();
            let pb = b.location.representative();
            pa.cmp(&pb)
        });
        Ok(RegularZeroSet { zeros })
    }

    fn bisect(&self, x: &[RatInterval]) -> (IntervalVector, IntervalVector) {
        let mut axis = 0;
        let mut best = x[0].width();
        for (i, iv) in x.iter().enumerate().skip(1) {
            let w = iv.width();
            if w > best {
                best = w;
                axis = i;
            }
        }
        let (a, b) = x[axis].bisect();
        let mut lo = x.to_vec();
        let mut hi = x.to_vec();
        lo[axis] = a;
        hi[axis] = b;
        (lo, hi)
    }

    /// True when some component provably has no zero on `x`.
    fn excluded(&self, x: &[RatInterval]) -> bool {
        let natural = self.f.eval_interval(x);
        if natural.iter().any(|v| !v.contains_zero()) {
            return true;
        }
        let m = box_mid(x);
        let fm = self.f.eval(&m);
        let jx = self.f.jacobian_interval(x);
        let dx: Vec<RatInterval> = x
            .iter()
            .zip(&m)
            .map(|(xi, mi)| xi - &RatInterval::point(mi.clone()))
            .collect();
        (0..fm.len()).any(|i| {
            let mut acc = RatInterval::point(fm[i].clone());
            for j in 0..dx.len() {
                acc = &acc + &(&jx[i][j] * &dx[j]);
            }
            !acc.contains_zero()
        })
    }

    fn krawczyk_operator(&self, x: &[RatInterval]) -> Option<IntervalVector> {
        let n = x.len();
        let m = box_mid(x);
        let y = self.f.jacobian_at(&m).inverse().ok()?;
        let fm = self.f.eval(&m);
        let yf = y.mul_vec(&fm);
        let jx = self.f.jacobian_interval(x);
        let dx: Vec<RatInterval> = x
            .iter()
            .zip(&m)
            .map(|(xi, mi)| xi - &RatInterval::point(mi.clone()))
            .collect();
        let mut k = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = RatInterval::point(&m[i] - &yf[i]);
            for j in 0..n {
                // (I - Y J(X))_ij
                let mut c = RatInterval::point(if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                for (l, jrow) in jx.iter().enumerate() {
                    if !y[(i, l)].is_zero() {
                        c = &c - &jrow[j].scale(&y[(i, l)]);
                    }
                }
                acc = &acc + &(&c * &dx[j]);
            }
            k.push(acc.round_out(self.grid_bits));
        }
        Some(k)
    }

    fn krawczyk(&self, x: &[RatInterval], inflate: bool) -> Krawczyk {
        let region: IntervalVector = if inflate {
            x.iter()
                .map(|iv| iv.inflate(&(iv.width() / int(8))))
                .collect()
        } else {
            x.to_vec()
        };
        let Some(k) = self.krawczyk_operator(&region) else {
            return Krawczyk::Unknown;
        };
        let Some(enclosure) = box_intersect(&k, &region) else {
            return Krawczyk::Excluded;
        };
        if region.iter().zip(&k).all(|(r, ki)| r.strictly_contains(ki)) {
            Krawczyk::Unique { region, enclosure }
        } else {
            Krawczyk::Unknown
        }
    }

    fn exact_candidate(&self, e: &[RatInterval]) -> Option<Vec<Rational>> {
        let p: Vec<Rational> = e
            .iter()
            .map(|iv| simplest_between(iv.lo(), iv.hi()))
            .collect();
        self.f.eval(&p).iter().all(Zero::is_zero).then_some(p)
    }

    /// Tightens the enclosure and decides whether the zero lies in `omega`.
    fn settle(
        &self,
        region: IntervalVector,
        mut enc: IntervalVector,
        omega: &BoxDomain,
    ) -> Result<Found> {
        let mut exact = None;
        for _ in 0..200 {
            if let Some(p) = self.exact_candidate(&enc) {
                exact = Some(p);
                break;
            }
            let inside = box_subset(&enc, &self.closure);
            let outside = box_intersect(&enc, &self.closure).is_none();
            if box_max_width(&enc) < self.tolerance && (inside || outside) {
                break;
            }
            let Some(k) = self.krawczyk_operator(&enc) else {
                break;
            };
            let next = box_intersect(&k, &enc).expect("enclosure holds the zero");
            if next == enc {
                break;
            }
            enc = next;
        }
        let zero = match exact {
            Some(p) => {
                if omega.contains_open(&p) {
                    Some(self.regular(ZeroLocation::Exact(p.clone()), &p)?)
                } else if box_contains_point(&self.closure, &p) {
                    return Err(Error::BoundaryZero);
                } else {
                    None
                }
            }
            None => {
                if box_subset(&enc, &self.closure) {
                    let m = box_mid(&enc);
                    Some(self.regular(ZeroLocation::Enclosure(enc.clone()), &m)?)
                } else if box_intersect(&enc, &self.closure).is_none() {
                    None
                } else {
                    return Err(Error::BoundaryZero);
                }
            }
        };
        let enclosure = match &zero {
            Some(z) => z.location.as_box(),
            None => enc,
        };
        Ok(Found {
            region,
            enclosure,
            zero,
        })
    }

    fn regular(&self, location: ZeroLocation, at: &[Rational]) -> Result<RegularZero> {
        let jacobian = self.f.jacobian_at(at);
        let det = jacobian.det()?;
        let det_sign = Sign::of(&det).ok_or_else(|| Error::IrregularZero {
            near: location.to_string(),
        })?;
        Ok(RegularZero {
            location,
            jacobian,
            det_sign,
        })
    }

    fn merge(&self, found: &mut Vec<Found>, candidate: Found) -> Result<()> {
        for old in found.iter() {
            if box_subset(&candidate.enclosure, &old.region)
                || box_subset(&old.enclosure, &candidate.region)
            {
                return Ok(());
            }
            if box_intersect(&candidate.enclosure, &old.enclosure).is_some() {
                return Err(Error::ResolutionExceeded {
                    near: describe(&candidate.enclosure),
                });
            }
        }
        found.push(candidate);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn dom(n: usize, r: i64) -> BoxDomain {
        BoxDomain::cube(n, int(r)).unwrap()
    }

    fn exact_points(z: &RegularZeroSet) -> Vec<Vec<Rational>> {
        z.zeros
            .iter()
            .map(|z| z.location.representative())
            .collect()
    }

    #[test]
    fn worked_examples() {
        let f = PolynomialMap::parse(&["x"]).unwrap();
        let z = find_zeros(&f, &dom(1, 1)).unwrap();
        assert_eq!(exact_points(&z), vec![vec![int(0)]]);
        assert_eq!(z.zeros[0].jacobian, Matrix::from_ints(&[&[1]]));

        let f = PolynomialMap::parse(&["x^2 - 1"]).unwrap();
        let z = find_zeros(&f, &dom(1, 2)).unwrap();
        assert_eq!(exact_points(&z), vec![vec![int(-1)], vec![int(1)]]);
        assert_eq!(z.zeros[0].det_sign, Sign::Minus);
        assert_eq!(z.zeros[1].det_sign, Sign::Plus);

        let f = PolynomialMap::parse(&["x^2 - 1", "y"]).unwrap();
        let z = find_zeros(&f, &dom(2, 2)).unwrap();
        assert_eq!(
            exact_points(&z),
            vec![vec![int(-1), int(0)], vec![int(1), int(0)]]
        );

        let f = PolynomialMap::parse(&["x^2 + 1"]).unwrap();
        assert!(find_zeros(&f, &dom(1, 2)).unwrap().is_empty());
    }

    #[test]
    fn irrational_zeros_are_enclosed() {
        let f = PolynomialMap::parse(&["x^2 + y^2 - 1", "x - y"]).unwrap();
        let z = find_zeros(&f, &dom(2, 2)).unwrap();
        assert_eq!(z.len(), 2);
        for zero in &z.zeros {
            let ZeroLocation::Enclosure(b) = &zero.location else {
                panic!("expected enclosure")
            };
            assert!(box_max_width(b) < ratio(1, 1 << 30));
            let v = to_f64(&b[0].mid()).abs();
            assert!((v - 0.5f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn zero_on_bisection_line_is_found_once() {
        // Zeros at 0 and ±1/2 sit on the first subdivision lines.
        let f = PolynomialMap::parse(&["4*x^3 - x"]).unwrap();
        let z = find_zeros(&f, &dom(1, 1)).unwrap();
        assert_eq!(
            exact_points(&z),
            vec![vec![ratio(-1, 2)], vec![int(0)], vec![ratio(1, 2)]]
        );
        let f = PolynomialMap::parse(&["x - 1/3", "y + 2/7"]).unwrap();
        let z = find_zeros(&f, &dom(2, 1)).unwrap();
        assert_eq!(exact_points(&z), vec![vec![ratio(1, 3), ratio(-2, 7)]]);
    }

    #[test]
    fn failures() {
        let f = PolynomialMap::parse(&["x^2"]).unwrap();
        assert!(matches!(
            find_zeros(&f, &dom(1, 1)),
            Err(Error::IrregularZero { .. })
        ));
        let f = PolynomialMap::parse(&["x - 1"]).unwrap();
        assert_eq!(find_zeros(&f, &dom(1, 1)), Err(Error::BoundaryZero));
        let f = PolynomialMap::parse(&["x - 3"]).unwrap();
        assert!(find_zeros(&f, &dom(1, 1)).unwrap().is_empty());
    }
}

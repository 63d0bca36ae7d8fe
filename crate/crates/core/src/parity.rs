//! Parity of admissible polynomial paths, over intervals and locally at
//! isolated eigenvalues, plus the checks behind its axioms.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    count_distinct_closed, count_with_multiplicity_open, int, real_roots_in, Poly, Rational,
    RootLocation,
};
use crate::multiplicity::{isolation_radius, spectrum, Eigenvalue, Spectrum};
use crate::paths::{AdmissiblePath, BivariatePath, Interval, PolyMatrixPath};
use crate::sign::Sign;

/// `(-1)^{Σ χ}` over the eigenvalues in the open interval `(a, b)`.
pub fn parity_interval(p: &AdmissiblePath) -> Sign {
    let det = p.path().det_poly();
    let iv = p.interval();
    // Endpoints are invertible, so det is not identically zero.
    Sign::from_exponent(count_with_multiplicity_open(&det, iv.a(), iv.b()))
}

/// Parity together with the eigenvalue breakdown that produced it.
pub fn parity_with_spectrum(p: &AdmissiblePath) -> Result<(Sign, Spectrum)> {
    let s = spectrum(p.path(), p.interval())?;
    Ok((Sign::from_exponent(s.total_chi()), s))
}

/// `sign det L(a) · sign det L(b)`: the determinant-component oracle.
pub fn parity_endpoint_sign(p: &AdmissiblePath) -> Sign {
    let sa = Sign::of(&p.path().det_at(p.interval().a())).expect("admissible start");
    let sb = Sign::of(&p.path().det_at(p.interval().b())).expect("admissible end");
    sa * sb
}

/// Local parity at an isolated eigenvalue, with the certified window it was
/// evaluated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalParity {
    pub value: Sign,
    pub chi: usize,
    /// Closed window around the eigenvalue holding no other eigenvalue.
    pub window: Interval,
}

/// Local parity at a rational point `λ0`, evaluated on `[λ0 - δ, λ0 + δ]` for
/// a certified isolation radius `δ`.
pub fn parity_local(path: &PolyMatrixPath, lambda0: &Rational) -> Result<LocalParity> {
    let det = path.det_poly();
    if det.is_zero() {
        return Err(Error::InfiniteMultiplicity);
    }
    let chi = det.order_at(lambda0);
    let delta = isolation_radius(&det, lambda0)?;
    let window = Interval::new(lambda0 - &delta, lambda0 + &delta)?;
    let value = parity_interval(&AdmissiblePath::new(path.clone(), window.clone())?);
    Ok(LocalParity { value, chi, window })
}

/// Local parity at an eigenvalue from a computed spectrum; irrational
/// eigenvalues are handled through a refined isolating window.
pub fn parity_local_at(path: &PolyMatrixPath, eigenvalue: &Eigenvalue) -> Result<LocalParity> {
    let chi = eigenvalue
        .result
        .chi
        .finite()
        .ok_or(Error::InfiniteMultiplicity)?;
    let (mut lo, mut hi) = match &eigenvalue.location {
        RootLocation::Exact(r) => return parity_local(path, r),
        RootLocation::Isolated { lo, hi } => (lo.clone(), hi.clone()),
    };
    let det = path.det_poly();
    let factor = &eigenvalue.factor;
    let two = int(2);
    let mut steps = 0;
    while count_distinct_closed(&det, &lo, &hi) != 1 {
        steps += 1;
        if steps > 4096 {
            return Err(Error::NotIsolated);
        }
        let mid = (&lo + &hi) / &two;
        let fm = factor.eval(&mid);
        if fm.is_zero() {
            return Err(Error::NotIsolated);
        }
        if Sign::of(&fm) == Sign::of(&factor.eval(&lo)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let window = Interval::new(lo, hi)?;
    let value = parity_interval(&AdmissiblePath::new(path.clone(), window.clone())?);
    Ok(LocalParity { value, chi, window })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitParity {
    pub left: Sign,
    pub right: Sign,
    pub whole: Sign,
}

impl SplitParity {
    pub fn holds(&self) -> bool {
        self.whole == self.left * self.right
    }
}

/// Parities on `[a, c]`, `[c, b]` and `[a, b]` for an interior non-eigenvalue `c`.
pub fn parity_split_check(p: &AdmissiblePath, c: &Rational) -> Result<SplitParity> {
    let iv = p.interval();
    if !iv.contains_open(c) {
        return Err(Error::InvalidInterval {
            a: iv.a().clone(),
            b: c.clone(),
        });
    }
    if p.path().det_at(c).is_zero() {
        return Err(Error::SplitAtEigenvalue { at: c.clone() });
    }
    let left = p.restrict(Interval::new(iv.a().clone(), c.clone())?)?;
    let right = p.restrict(Interval::new(c.clone(), iv.b().clone())?)?;
    Ok(SplitParity {
        left: parity_interval(&left),
        right: parity_interval(&right),
        whole: parity_interval(p),
    })
}

/// Verifies that `det H(t, a)` and `det H(t, b)` have no root for `t ∈ [0, 1]`.
pub fn certify_homotopy(h: &BivariatePath, interval: &Interval) -> Result<()> {
    for end in [interval.a(), interval.b()] {
        let det_t: Poly = h.at_lambda(end).det_poly();
        if det_t.is_zero() || !real_roots_in(&det_t, &Interval::unit())?.is_empty() {
            return Err(Error::InadmissibleHomotopy {
                endpoint: end.clone(),
            });
        }
    }
    Ok(())
}

/// Parities of the end sections `H(0, ·)` and `H(1, ·)` of a certified
/// admissible homotopy.
pub fn homotopy_parity_check(h: &BivariatePath, interval: &Interval) -> Result<(Sign, Sign)> {
    certify_homotopy(h, interval)?;
    let zero = Rational::zero();
    let one = int(1);
    let s0 = AdmissiblePath::new(h.section(&zero), interval.clone())?;
    let s1 = AdmissiblePath::new(h.section(&one), interval.clone())?;
    Ok((parity_interval(&s0), parity_interval(&s1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ratio, Matrix};

    fn e_path() -> PolyMatrixPath {
        PolyMatrixPath::diagonal(&[Poly::x(), Poly::one()])
    }

    fn sym(a: i64, b: i64) -> Interval {
        Interval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn interval_parity_examples() {
        let p = AdmissiblePath::new(e_path(), sym(-1, 1)).unwrap();
        assert_eq!(parity_interval(&p), Sign::Minus);
        assert_eq!(parity_endpoint_sign(&p), Sign::Minus);
        let c = AdmissiblePath::new(
            PolyMatrixPath::constant(Matrix::from_ints(&[&[2, 1], &[1, 1]])).unwrap(),
            sym(-3, 5),
        )
        .unwrap();
        assert_eq!(parity_interval(&c), Sign::Plus);
        assert_eq!(parity_endpoint_sign(&c), Sign::Plus);
        let ee = AdmissiblePath::new(e_path().compose(&e_path()).unwrap(), sym(-1, 1)).unwrap();
        assert_eq!(parity_interval(&ee), Sign::Plus);
        assert_eq!(parity_endpoint_sign(&ee), Sign::Plus);
        let id = Matrix::identity(2);
        let seg = AdmissiblePath::new(
            PolyMatrixPath::segment(&id, &-&id).unwrap(),
            Interval::unit(),
        )
        .unwrap();
        assert_eq!(parity_endpoint_sign(&seg), Sign::Plus);
        assert_eq!(parity_interval(&seg), Sign::Plus);
        let (s, spec) = parity_with_spectrum(&seg).unwrap();
        assert_eq!(s, Sign::Plus);
        assert_eq!(spec.total_chi(), 2);
    }

    #[test]
    fn local_parity_examples() {
        let l0 = ratio(2, 3);
        let e = PolyMatrixPath::diagonal(&[Poly::linear_root(&l0), Poly::one()]);
        let lp = parity_local(&e, &l0).unwrap();
        assert_eq!((lp.value, lp.chi), (Sign::Minus, 1));
        assert_eq!(parity_local(&e, &int(5)).unwrap().value, Sign::Plus);
        let j = PolyMatrixPath::shifted_operator(&Matrix::from_ints(&[&[0, 1], &[0, 0]])).unwrap();
        let lp = parity_local(&j, &int(0)).unwrap();
        assert_eq!((lp.value, lp.chi), (Sign::Plus, 2));
        let singular = PolyMatrixPath::diagonal(&[Poly::x(), Poly::zero()]);
        assert_eq!(
            parity_local(&singular, &int(0)),
            Err(Error::InfiniteMultiplicity)
        );
    }

    #[test]
    fn local_parity_at_irrational_eigenvalue() {
        // det = (λ² - 2)(λ - 3/2): √2 ≈ 1.414 sits close to 3/2.
        let p = PolyMatrixPath::diagonal(&[
            Poly::from_ints(&[-2, 0, 1]),
            Poly::linear_root(&ratio(3, 2)),
        ]);
        let s = spectrum(&p, &sym(1, 2)).unwrap();
        assert_eq!(s.eigenvalues.len(), 2);
        for ev in &s.eigenvalues {
            let lp = parity_local_at(&p, ev).unwrap();
            assert_eq!(lp.value, Sign::Minus);
            let da = Sign::of(&p.det_at(lp.window.a())).unwrap();
            let db = Sign::of(&p.det_at(lp.window.b())).unwrap();
            assert_ne!(da, db);
        }
    }

    #[test]
    fn split_examples() {
        let p = AdmissiblePath::new(e_path(), sym(-1, 1)).unwrap();
        let s = parity_split_check(&p, &ratio(1, 2)).unwrap();
        assert_eq!(
            (s.left, s.right, s.whole),
            (Sign::Minus, Sign::Plus, Sign::Minus)
        );
        assert_eq!(
            parity_split_check(&p, &int(0)),
            Err(Error::SplitAtEigenvalue { at: int(0) })
        );
        let c = AdmissiblePath::new(PolyMatrixPath::identity(3), sym(-1, 1)).unwrap();
        let s = parity_split_check(&c, &ratio(1, 7)).unwrap();
        assert_eq!(
            (s.left, s.right, s.whole),
            (Sign::Plus, Sign::Plus, Sign::Plus)
        );
        let two = PolyMatrixPath::diagonal(&[
            Poly::linear_root(&ratio(-1, 2)),
            Poly::linear_root(&ratio(1, 2)),
        ]);
        let p = AdmissiblePath::new(two, sym(-1, 1)).unwrap();
        let s = parity_split_check(&p, &int(0)).unwrap();
        assert_eq!(
            (s.left, s.right, s.whole),
            (Sign::Minus, Sign::Minus, Sign::Plus)
        );
        assert!(s.holds());
    }

    fn diag_homotopy(shift: Rational) -> BivariatePath {
        // H(t, λ) = diag(λ - shift * t, 1)
        BivariatePath::new(vec![
            e_path(),
            PolyMatrixPath::diagonal(&[Poly::constant(-shift), Poly::zero()]),
        ])
        .unwrap()
    }

    #[test]
    fn homotopy_examples() {
        let h = BivariatePath::new(vec![e_path()]).unwrap();
        assert_eq!(
            homotopy_parity_check(&h, &sym(-1, 1)),
            Ok((Sign::Minus, Sign::Minus))
        );
        assert_eq!(
            homotopy_parity_check(&diag_homotopy(ratio(1, 2)), &sym(-1, 1)),
            Ok((Sign::Minus, Sign::Minus))
        );
        assert_eq!(
            homotopy_parity_check(&diag_homotopy(int(2)), &sym(-1, 1)),
            Err(Error::InadmissibleHomotopy { endpoint: int(1) })
        );
    }
}

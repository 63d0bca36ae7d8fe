//! Closed intervals with exact rational endpoints.
//!
//! Endpoints are exact, so every operation is a true enclosure. Long chains of
//! operations can be kept small with [`RatInterval::round_out`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::linalg::{ceil_dyadic, floor_dyadic, format_rational, int, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "RatInterval::new: lo > hi");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `other` lies in the open interior of `self`.
    pub fn strictly_contains(&self, other: &RatInterval) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    pub fn subset_of(&self, other: &RatInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &RatInterval) -> Option<RatInterval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(RatInterval { lo, hi })
    }

    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Smallest distance from a point of the interval to zero.
    pub fn mignitude(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn magnitude(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn inflate(&self, r: &Rational) -> RatInterval {
        RatInterval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    pub fn bisect(&self) -> (RatInterval, RatInterval) {
        let m = self.mid();
        (
            RatInterval::new(self.lo.clone(), m.clone()),
            RatInterval::new(m, self.hi.clone()),
        )
    }

    /// Outward rounding to the dyadic grid of spacing `2^-bits`.
    pub fn round_out(&self, bits: u32) -> RatInterval {
        RatInterval {
            lo: floor_dyadic(&self.lo, bits),
            hi: ceil_dyadic(&self.hi, bits),
        }
    }

    pub fn scale(&self, s: &Rational) -> RatInterval {
        let a = &self.lo * s;
        let b = &self.hi * s;
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// Tight enclosure of `{x^k : x ∈ self}`.
    pub fn powi(&self, k: u32) -> RatInterval {
        if k == 0 {
            return RatInterval::point(int(1));
        }
        let a = num_traits::pow(self.lo.clone(), k as usize);
        let b = num_traits::pow(self.hi.clone(), k as usize);
        if k % 2 == 1 {
            RatInterval { lo: a, hi: b }
        } else if self.contains_zero() {
            RatInterval {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        } else {
            RatInterval {
                lo: (&a).min(&b).clone(),
                hi: a.max(b),
            }
        }
    }
}

impl Add for &RatInterval {
    type Output = RatInterval;
    fn add(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RatInterval {
    type Output = RatInterval;
    fn sub(self, rhs: &RatInterval) -> RatInterval {
        RatInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RatInterval {
    type Output = RatInterval;
    fn mul(self, rhs: &RatInterval) -> RatInterval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let p = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }
}

impl Neg for &RatInterval {
    type Output = RatInterval;
    fn neg(self) -> RatInterval {
        RatInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

/// A box as a list of coordinate intervals.
pub type IntervalVector = Vec<RatInterval>;

pub fn box_mid(b: &[RatInterval]) -> Vec<Rational> {
    b.iter().map(RatInterval::mid).collect()
}

pub fn box_max_width(b: &[RatInterval]) -> Rational {
    b.iter()
        .map(RatInterval::width)
        .max()
        .unwrap_or_else(Rational::zero)
}

pub fn box_contains_point(b: &[RatInterval], x: &[Rational]) -> bool {
    b.iter().zip(x).all(|(i, v)| i.contains(v))
}

pub fn box_subset(inner: &[RatInterval], outer: &[RatInterval]) -> bool {
    inner.iter().zip(outer).all(|(i, o)| i.subset_of(o))
}

pub fn box_intersect(a: &[RatInterval], b: &[RatInterval]) -> Option<IntervalVector> {
    a.iter().zip(b).map(|(x, y)| x.intersect(y)).collect()
}

/// Determinant enclosure of an interval matrix by cofactor expansion.
pub fn interval_det(m: &[Vec<RatInterval>]) -> RatInterval {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols)
}

fn det_rec(m: &[Vec<RatInterval>], row: usize, cols: &[usize]) -> RatInterval {
    if cols.is_empty() {
        return RatInterval::point(int(1));
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = RatInterval::point(Rational::zero());
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &det_rec(m, row + 1, &rest);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use proptest::prelude::*;

    fn iv(a: i64, b: i64) -> RatInterval {
        RatInterval::new(int(a), int(b))
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&iv(-1, 2) * &iv(3, 4), iv(-4, 8));
        assert_eq!(&iv(-1, 2) - &iv(3, 4), iv(-5, -1));
        assert_eq!(iv(-1, 2).powi(2), iv(0, 4));
        assert_eq!(iv(-3, -2).powi(2), iv(4, 9));
        assert_eq!(iv(-3, 2).powi(3), iv(-27, 8));
        assert_eq!(iv(1, 2).mignitude(), int(1));
        assert_eq!(iv(-1, 2).mignitude(), int(0));
        let r = RatInterval::point(ratio(1, 3)).round_out(4);
        assert!(r.contains(&ratio(1, 3)) && r.width() == ratio(1, 16));
    }

    #[test]
    fn determinant_enclosure() {
        let m = vec![
            vec![RatInterval::point(int(2)), RatInterval::point(int(1))],
            vec![iv(0, 1), RatInterval::point(int(3))],
        ];
        assert_eq!(interval_det(&m), iv(5, 6));
    }

    proptest! {
        #[test]
        fn products_enclose_pointwise(a in -20i64..20, w in 0i64..10, b in -20i64..20, v in 0i64..10,
                                       s in 0i64..=4, t in 0i64..=4) {
            let x = iv(a, a + w);
            let y = iv(b, b + v);
            let px = ratio(a * 4 + s * w, 4);
            let py = ratio(b * 4 + t * v, 4);
            prop_assert!((&x * &y).contains(&(&px * &py)));
            prop_assert!((&x - &y).contains(&(&px - &py)));
            prop_assert!(x.powi(3).contains(&(&px * &px * &px)));
        }
    }
}

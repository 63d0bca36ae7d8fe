//! Open boxes in ℝᴺ and their boundary facets.

use num_traits::Zero;

use super::interval::{IntervalVector, RatInterval};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::paths::Interval;

/// The open box `Π (a_i, b_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxDomain {
    sides: Vec<Interval>,
}

impl BoxDomain {
    pub fn new(sides: Vec<Interval>) -> Self {
        BoxDomain { sides }
    }

    /// `(-r, r)ᴺ`.
    pub fn cube(n: usize, r: Rational) -> Result<Self> {
        let side = Interval::new(-r.clone(), r)?;
        Ok(BoxDomain {
            sides: vec![side; n],
        })
    }

    pub fn dimension(&self) -> usize {
        self.sides.len()
    }

    pub fn sides(&self) -> &[Interval] {
        &self.sides
    }

    /// The closure as an interval vector.
    pub fn closure(&self) -> IntervalVector {
        self.sides
            .iter()
            .map(|s| RatInterval::new(s.a().clone(), s.b().clone()))
            .collect()
    }

    pub fn contains_open(&self, x: &[Rational]) -> bool {
        self.sides.iter().zip(x).all(|(s, v)| s.contains_open(v))
    }

    pub fn contains_origin(&self) -> bool {
        let zero = vec![Rational::zero(); self.dimension()];
        self.contains_open(&zero)
    }

    /// The `2N` closed facets, each a box with one degenerate coordinate.
    pub fn facets(&self) -> Vec<IntervalVector> {
        let full = self.closure();
        let mut out = Vec::with_capacity(2 * full.len());
        for (i, s) in self.sides.iter().enumerate() {
            for end in [s.a(), s.b()] {
                let mut f = full.clone();
                f[i] = RatInterval::point(end.clone());
                out.push(f);
            }
        }
        out
    }

    /// The two halves cut by the hyperplane `x_axis = c`.
    pub fn split(&self, axis: usize, c: &Rational) -> Result<(BoxDomain, BoxDomain)> {
        let s = self.sides.get(axis).ok_or(Error::DimensionMismatch {
            expected: self.dimension(),
            found: axis + 1,
        })?;
        let mut left = self.sides.clone();
        let mut right = self.sides.clone();
        left[axis] = Interval::new(s.a().clone(), c.clone())?;
        right[axis] = Interval::new(c.clone(), s.b().clone())?;
        Ok((BoxDomain::new(left), BoxDomain::new(right)))
    }

    /// The closed cut `{x ∈ closure : x_axis = c}`.
    pub fn cut(&self, axis: usize, c: &Rational) -> IntervalVector {
        let mut f = self.closure();
        f[axis] = RatInterval::point(c.clone());
        f
    }

    pub fn from_intervals(b: &[RatInterval]) -> Result<Self> {
        Ok(BoxDomain {
            sides: b
                .iter()
                .map(|i| Interval::new(i.lo().clone(), i.hi().clone()))
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn facets_and_split() {
        let d = BoxDomain::cube(2, int(1)).unwrap();
        assert_eq!(d.facets().len(), 4);
        assert!(d.contains_origin());
        let (l, r) = d.split(0, &int(0)).unwrap();
        assert!(!l.contains_origin() && !r.contains_origin());
        assert!(d.split(0, &int(1)).is_err());
        assert!(d.split(3, &int(0)).is_err());
    }
}

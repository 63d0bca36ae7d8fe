//! Admissible terns `(f, Ω, ε)` and interval certificates that a map has no
//! zero on a set.

use num_traits::Zero;

use super::domain::BoxDomain;
use super::interval::{box_max_width, IntervalVector, RatInterval};
use super::polymap::PolynomialMap;
use crate::error::{Error, Result};
use crate::linalg::{dyadic_unit, Rational};
use crate::orientation::Orientation;

/// Limits for [`exclusion_margin`].
#[derive(Clone, Debug)]
pub struct CertifyConfig {
    /// Pieces are not split below `scale · 2^-depth_bits`.
    pub depth_bits: u32,
    pub max_pieces: usize,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            depth_bits: 24,
            max_pieces: 400_000,
        }
    }
}

/// Certifies that `eval` has no zero on the union of `pieces` by subdividing
/// until every piece has a component enclosure avoiding 0.
///
/// Returns `η > 0` with `‖g(x)‖_∞ ≥ η` on the whole set, or `None` when the
/// subdivision limits are reached.
pub fn exclusion_margin<F>(
    pieces: Vec<IntervalVector>,
    eval: F,
    cfg: &CertifyConfig,
) -> Option<Rational>
where
    F: Fn(&[RatInterval]) -> Vec<RatInterval>,
{
    let scale = pieces
        .iter()
        .map(|p| box_max_width(p))
        .max()
        .unwrap_or_else(Rational::zero);
    let floor = &scale * dyadic_unit(cfg.depth_bits);
    let mut margin: Option<Rational> = None;
    let mut stack = pieces;
    let mut count = 0usize;
    while let Some(p) = stack.pop() {
        count += 1;
        if count > cfg.max_pieces {
            return None;
        }
        let best = eval(&p).iter().map(RatInterval::mignitude).max()?;
        if !best.is_zero() {
            margin = Some(match margin {
                Some(m) if m <= best => m,
                _ => best,
            });
            continue;
        }
        let width = box_max_width(&p);
        if width.is_zero() || width < floor {
            return None;
        }
        let axis = (0..p.len())
            .max_by_key(|&i| p[i].width())
            .expect("nonempty piece");
        let (a, b) = p[axis].bisect();
        let mut lo = p.clone();
        let mut hi = p;
        lo[axis] = a;
        hi[axis] = b;
        stack.push(hi);
        stack.push(lo);
    }
    margin
}

/// Margin of `f` on the boundary of `omega`.
pub fn boundary_margin(f: &PolynomialMap, omega: &BoxDomain) -> Option<Rational> {
    exclusion_margin(
        omega.facets(),
        |b| f.eval_interval(b),
        &CertifyConfig::default(),
    )
}

/// `(f, Ω, ε)` with `0 ∉ f(∂Ω)` certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTern {
    f: PolynomialMap,
    omega: BoxDomain,
    orientation: Orientation,
    margin: Rational,
}

impl AdmissibleTern {
    pub fn new(f: PolynomialMap, omega: BoxDomain, orientation: Orientation) -> Result<Self> {
        let n = f.dimension();
        for found in [omega.dimension(), orientation.dimension()] {
            if found != n {
                return Err(Error::DimensionMismatch { expected: n, found });
            }
        }
        let margin = boundary_margin(&f, &omega).ok_or(Error::BoundaryZero)?;
        Ok(AdmissibleTern {
            f,
            omega,
            orientation,
            margin,
        })
    }

    pub fn map(&self) -> &PolynomialMap {
        &self.f
    }

    pub fn domain(&self) -> &BoxDomain {
        &self.omega
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// Certified lower bound for `‖f‖_∞` on `∂Ω`.
    pub fn margin(&self) -> &Rational {
        &self.margin
    }

    pub fn dimension(&self) -> usize {
        self.f.dimension()
    }

    /// The same map and orientation on another box.
    pub fn with_domain(&self, omega: BoxDomain) -> Result<AdmissibleTern> {
        AdmissibleTern::new(self.f.clone(), omega, self.orientation.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use crate::orientation::ls_orientation;

    #[test]
    fn boundary_certification() {
        let f = PolynomialMap::parse(&["x^2 - 1"]).unwrap();
        let t = AdmissibleTern::new(
            f.clone(),
            BoxDomain::cube(1, int(2)).unwrap(),
            ls_orientation(1),
        )
        .unwrap();
        assert_eq!(t.margin(), &int(3));
        assert_eq!(
            AdmissibleTern::new(f, BoxDomain::cube(1, int(1)).unwrap(), ls_orientation(1)),
            Err(Error::BoundaryZero)
        );
        let g = PolynomialMap::parse(&["x^2 + y^2 - 1", "x - y"]).unwrap();
        let t =
            AdmissibleTern::new(g, BoxDomain::cube(2, int(2)).unwrap(), ls_orientation(2)).unwrap();
        assert!(t.margin() > &ratio(1, 8));
        let h = PolynomialMap::parse(&["x"]).unwrap();
        assert!(matches!(
            AdmissibleTern::new(h, BoxDomain::cube(1, int(1)).unwrap(), ls_orientation(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}

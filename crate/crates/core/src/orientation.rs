//! Orientations of invertible operators, anchored at a base operator and a
//! sign, and evaluated through the parity of a connecting path.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::parity::parity_interval;
use crate::paths::{AdmissiblePath, Interval, PolyMatrixPath};
use crate::sign::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Anchor {
    Based {
        base: Matrix,
        sign: Sign,
    },
    /// The oriented set has no invertible element; evaluation is refused.
    Trivial {
        dimension: usize,
    },
}

/// `ε(L) = sign · σ(segment(L, base), [0, 1])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    anchor: Anchor,
}

impl Orientation {
    pub fn new(base: Matrix, sign: Sign) -> Result<Self> {
        base.require_square()?;
        if base.det()? == num_traits::Zero::zero() {
            return Err(Error::SingularOperator);
        }
        Ok(Orientation {
            anchor: Anchor::Based { base, sign },
        })
    }

    pub fn trivial(dimension: usize) -> Self {
        Orientation {
            anchor: Anchor::Trivial { dimension },
        }
    }

    pub fn dimension(&self) -> usize {
        match &self.anchor {
            Anchor::Based { base, .. } => base.rows(),
            Anchor::Trivial { dimension } => *dimension,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.anchor, Anchor::Trivial { .. })
    }

    pub fn base(&self) -> Option<&Matrix> {
        match &self.anchor {
            Anchor::Based { base, .. } => Some(base),
            Anchor::Trivial { .. } => None,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match &self.anchor {
            Anchor::Based { sign, .. } => Some(*sign),
            Anchor::Trivial { .. } => None,
        }
    }

    /// The other orientation of the same set.
    pub fn opposite(&self) -> Orientation {
        match &self.anchor {
            Anchor::Based { base, sign } => Orientation {
                anchor: Anchor::Based {
                    base: base.clone(),
                    sign: -*sign,
                },
            },
            Anchor::Trivial { .. } => self.clone(),
        }
    }

    /// Evaluates through the parity of the straight path from `l` to the base.
    pub fn evaluate(&self, l: &Matrix) -> Result<Sign> {
        let (base, sign) = self.anchored()?;
        let connecting = self.connecting_path(l, base)?;
        Ok(*sign * parity_interval(&connecting))
    }

    /// The determinant-sign realisation `sign · sign det L · sign det base`.
    pub fn evaluate_by_determinant(&self, l: &Matrix) -> Result<Sign> {
        let (base, sign) = self.anchored()?;
        self.check_dimension(l)?;
        let dl = Sign::of(&l.det()?).ok_or(Error::SingularOperator)?;
        let db = Sign::of(&base.det()?).expect("base is invertible");
        Ok(*sign * dl * db)
    }

    fn anchored(&self) -> Result<(&Matrix, &Sign)> {
        match &self.anchor {
            Anchor::Based { base, sign } => Ok((base, sign)),
            Anchor::Trivial { .. } => Err(Error::DegenerateOrientation),
        }
    }

    fn check_dimension(&self, l: &Matrix) -> Result<()> {
        let n = l.require_square()?;
        if n != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: n,
            });
        }
        Ok(())
    }

    fn connecting_path(&self, l: &Matrix, base: &Matrix) -> Result<AdmissiblePath> {
        self.check_dimension(l)?;
        let seg = PolyMatrixPath::segment(l, base)?;
        AdmissiblePath::new(seg, Interval::unit()).map_err(|e| match e {
            Error::InadmissiblePath { .. } => Error::SingularOperator,
            other => other,
        })
    }
}

/// The Leray–Schauder orientation: base `I`, sign `+1`, so `ε(L) = sign det L`.
pub fn ls_orientation(dimension: usize) -> Orientation {
    Orientation::new(Matrix::identity(dimension), Sign::Plus).expect("identity is invertible")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationVerdict {
    pub passed: bool,
    pub parity: Sign,
    pub at_start: Sign,
    pub at_end: Sign,
}

/// Checks `σ(L, [a, b]) = ε(L(a)) · ε(L(b))`.
pub fn orientation_consistency_check(
    orientation: &Orientation,
    p: &AdmissiblePath,
) -> Result<OrientationVerdict> {
    let parity = parity_interval(p);
    let at_start = orientation.evaluate(&p.start())?;
    let at_end = orientation.evaluate(&p.end())?;
    Ok(OrientationVerdict {
        passed: parity == at_start * at_end,
        parity,
        at_start,
        at_end,
    })
}

//! The JSON problem-file format shared by the CLI and campaign witnesses.
//!
//! Rationals are written as `"p/q"` strings (plain JSON integers are accepted
//! on input) and are normalized on parse.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::degree::{AdmissibleTern, BoxDomain, PolynomialMap};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use crate::orientation::{ls_orientation, Orientation};
use crate::paths::{BivariatePath, Interval, PolyMatrixPath};
use crate::sign::Sign;
use crate::verify::Campaign;

pub const FORMAT_VERSION: &str = "paritydeg/1";

/// A rational that serializes as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

struct QVisitor;

impl Visitor<'_> for QVisitor {
    type Value = Q;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a rational as a \"p/q\" string or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Q, E> {
        parse_rational(v).map(Q).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Q, E> {
        Ok(Q(Rational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Q, E> {
        Ok(Q(Rational::from_integer(v.into())))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        d.deserialize_any(QVisitor)
    }
}

pub type MatrixSpec = Vec<Vec<Q>>;

fn matrix_spec(m: &Matrix) -> MatrixSpec {
    m.to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(Q).collect())
        .collect()
}

fn matrix_from_spec(spec: &MatrixSpec) -> Result<Matrix> {
    Matrix::from_rows(
        spec.iter()
            .map(|r| r.iter().map(|q| q.0.clone()).collect())
            .collect(),
    )
}

fn interval_from_spec(spec: &[Q; 2]) -> Result<Interval> {
    Interval::new(spec[0].0.clone(), spec[1].0.clone())
}

fn interval_spec(i: &Interval) -> [Q; 2] {
    [Q(i.a().clone()), Q(i.b().clone())]
}

/// `L(λ) = Σ C_j λ^j`, optionally with a parameter interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixPathSpec {
    pub coefficients: Vec<MatrixSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interval: Option<[Q; 2]>,
}

impl MatrixPathSpec {
    pub fn from_path(path: &PolyMatrixPath, interval: Option<&Interval>) -> Self {
        MatrixPathSpec {
            coefficients: path.coefficients().iter().map(matrix_spec).collect(),
            interval: interval.map(interval_spec),
        }
    }

    pub fn path(&self) -> Result<PolyMatrixPath> {
        PolyMatrixPath::new(
            self.coefficients
                .iter()
                .map(matrix_from_spec)
                .collect::<Result<_>>()?,
        )
    }

    pub fn interval(&self) -> Result<Option<Interval>> {
        self.interval.as_ref().map(interval_from_spec).transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearOperatorSpec {
    pub matrix: MatrixSpec,
    /// The open box `Ω`; defaults to `(-1, 1)ᴺ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<[Q; 2]>>,
}

/// `H(t, λ) = Σ t^i P_i(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopySpec {
    pub t_coefficients: Vec<Vec<MatrixSpec>>,
    pub interval: [Q; 2],
}

impl HomotopySpec {
    pub fn from_homotopy(h: &BivariatePath, interval: &Interval) -> Self {
        HomotopySpec {
            t_coefficients: h
                .t_coefficients()
                .iter()
                .map(|p| p.coefficients().iter().map(matrix_spec).collect())
                .collect(),
            interval: interval_spec(interval),
        }
    }

    pub fn homotopy(&self) -> Result<(BivariatePath, Interval)> {
        let coeffs = self
            .t_coefficients
            .iter()
            .map(|p| PolyMatrixPath::new(p.iter().map(matrix_from_spec).collect::<Result<_>>()?))
            .collect::<Result<Vec<_>>>()?;
        Ok((
            BivariatePath::new(coeffs)?,
            interval_from_spec(&self.interval)?,
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationSpec {
    /// Base `I`, sign `+1`.
    LeraySchauder,
    Trivial,
    Based {
        base: MatrixSpec,
        sign: Sign,
    },
}

impl OrientationSpec {
    pub fn from_orientation(o: &Orientation) -> Self {
        match (o.base(), o.sign()) {
            (Some(base), Some(sign)) => {
                if *o == ls_orientation(base.rows()) {
                    OrientationSpec::LeraySchauder
                } else {
                    OrientationSpec::Based {
                        base: matrix_spec(base),
                        sign,
                    }
                }
            }
            _ => OrientationSpec::Trivial,
        }
    }

    pub fn orientation(&self, n: usize) -> Result<Orientation> {
        match self {
            OrientationSpec::LeraySchauder => Ok(ls_orientation(n)),
            OrientationSpec::Trivial => Ok(Orientation::trivial(n)),
            OrientationSpec::Based { base, sign } => {
                Orientation::new(matrix_from_spec(base)?, *sign)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialMapSpec {
    /// One polynomial per component, e.g. `"x^2 - 1"`.
    pub components: Vec<String>,
}

impl PolynomialMapSpec {
    pub fn from_map(f: &PolynomialMap) -> Self {
        PolynomialMapSpec {
            components: f.components().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn map(&self) -> Result<PolynomialMap> {
        let refs: Vec<&str> = self.components.iter().map(String::as_str).collect();
        PolynomialMap::parse(&refs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernSpec {
    pub map: Vec<String>,
    pub domain: Vec<[Q; 2]>,
    #[serde(default = "default_orientation")]
    pub orientation: OrientationSpec,
}

fn default_orientation() -> OrientationSpec {
    OrientationSpec::LeraySchauder
}

impl TernSpec {
    pub fn from_tern(t: &AdmissibleTern) -> Self {
        TernSpec {
            map: PolynomialMapSpec::from_map(t.map()).components,
            domain: domain_spec(t.domain()),
            orientation: OrientationSpec::from_orientation(t.orientation()),
        }
    }

    /// The parts of the tern, without certifying admissibility.
    pub fn parts(&self) -> Result<(PolynomialMap, BoxDomain, Orientation)> {
        let f = PolynomialMapSpec {
            components: self.map.clone(),
        }
        .map()?;
        let omega = domain_from_spec(&self.domain)?;
        let eps = self.orientation.orientation(f.dimension())?;
        Ok((f, omega, eps))
    }

    pub fn tern(&self) -> Result<AdmissibleTern> {
        let (f, omega, eps) = self.parts()?;
        AdmissibleTern::new(f, omega, eps)
    }
}

pub fn domain_spec(d: &BoxDomain) -> Vec<[Q; 2]> {
    d.sides().iter().map(interval_spec).collect()
}

pub fn domain_from_spec(spec: &[[Q; 2]]) -> Result<BoxDomain> {
    Ok(BoxDomain::new(
        spec.iter().map(interval_from_spec).collect::<Result<_>>()?,
    ))
}

impl LinearOperatorSpec {
    pub fn operator(&self) -> Result<(Matrix, BoxDomain)> {
        let m = matrix_from_spec(&self.matrix)?;
        let n = m.require_square()?;
        let omega = match &self.domain {
            Some(d) => domain_from_spec(d)?,
            None => BoxDomain::cube(n, Rational::from_integer(1.into()))?,
        };
        Ok((m, omega))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    MatrixPath(MatrixPathSpec),
    LinearOperator(LinearOperatorSpec),
    PolynomialMap(PolynomialMapSpec),
    Homotopy(HomotopySpec),
    Tern(TernSpec),
    Campaign(Campaign),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub version: String,
    #[serde(flatten)]
    pub problem: Problem,
}

impl ProblemFile {
    pub fn new(problem: Problem) -> Self {
        ProblemFile {
            version: FORMAT_VERSION.to_string(),
            problem,
        }
    }

    pub fn parse(text: &str) -> Result<ProblemFile> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported version {:?} (expected {FORMAT_VERSION:?})",
                file.version
            )));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files always serialize")
    }

    pub fn kind(&self) -> &'static str {
        match self.problem {
            Problem::MatrixPath(_) => "matrix_path",
            Problem::LinearOperator(_) => "linear_operator",
            Problem::PolynomialMap(_) => "polynomial_map",
            Problem::Homotopy(_) => "homotopy",
            Problem::Tern(_) => "tern",
            Problem::Campaign(_) => "campaign",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio, Poly};

    #[test]
    fn matrix_path_round_trip_normalizes() {
        let text = r#"{"version": "paritydeg/1",
            "matrix_path": {"coefficients": [[["0", 0], ["0", "2/2"]], [["4/4", "0"], ["0", "0"]]],
                            "interval": ["-1", "1"]}}"#;
        let file = ProblemFile::parse(text).unwrap();
        let Problem::MatrixPath(spec) = &file.problem else {
            panic!()
        };
        let path = spec.path().unwrap();
        assert_eq!(path, PolyMatrixPath::diagonal(&[Poly::x(), Poly::one()]));
        let again = ProblemFile::parse(&file.to_json()).unwrap();
        assert_eq!(again, file);
        assert!(file.to_json().contains("\"1\""));
        assert!(!file.to_json().contains("2/2"));
    }

    #[test]
    fn tern_round_trip() {
        let f = PolynomialMap::parse(&["x^2 - 1/4", "y"]).unwrap();
        let t =
            AdmissibleTern::new(f, BoxDomain::cube(2, int(1)).unwrap(), ls_orientation(2)).unwrap();
        let file = ProblemFile::new(Problem::Tern(TernSpec::from_tern(&t)));
        let back = ProblemFile::parse(&file.to_json()).unwrap();
        let Problem::Tern(spec) = back.problem else {
            panic!()
        };
        assert_eq!(spec.tern().unwrap(), t);

        let based =
            Orientation::new(Matrix::diagonal(&[ratio(-1, 2), int(3)]), Sign::Minus).unwrap();
        let spec = OrientationSpec::from_orientation(&based);
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"-1\""));
        let back: OrientationSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.orientation(2).unwrap(), based);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(ProblemFile::parse("{}"), Err(Error::Parse(_))));
        assert!(ProblemFile::parse(
            r#"{"version": "paritydeg/1", "matrix_path": {"coefficients": [[["1/0"]]]}}"#
        )
        .is_err());
        assert!(ProblemFile::parse(
            r#"{"version": "other", "polynomial_map": {"components": ["x"]}}"#
        )
        .is_err());
    }
}

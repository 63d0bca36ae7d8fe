//! Executable checks of normalization, additivity (with excision and the
//! empty set) and homotopy invariance of the degree.

use num_traits::{One, Zero};
use serde::Serialize;

use super::domain::BoxDomain;
use super::interval::{box_intersect, RatInterval};
use super::polymap::PolynomialMap;
use super::tern::{exclusion_margin, AdmissibleTern, CertifyConfig};
use super::zeros::find_zeros;
use super::{degree_over, degree_regular, ls_degree_linear};
use crate::error::Result;
use crate::linalg::{int, ratio, real_roots_in, Matrix, Rational};
use crate::orientation::{ls_orientation, Orientation};
use crate::paths::{Interval, PolyMatrixPath};
use crate::random::{random_invertible_matrix, random_rational, stream_rng, CoefficientBounds};
use crate::sign::Sign;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomTally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl AxiomTally {
    fn record(&mut self, outcome: Option<bool>) {
        match outcome {
            Some(true) => self.passed += 1,
            Some(false) => self.failed += 1,
            None => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub normalization: AxiomTally,
    pub additivity: AxiomTally,
    pub excision: AxiomTally,
    pub empty_set: AxiomTally,
    pub homotopy: AxiomTally,
    /// One line per failure.
    pub witnesses: Vec<String>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        [
            self.normalization,
            self.additivity,
            self.excision,
            self.empty_set,
            self.homotopy,
        ]
        .iter()
        .all(|t| t.failed == 0)
    }
}

/// `deg(L·, Ω, ε) = ε(L)` when `0 ∈ Ω` and 0 otherwise; under the
/// Leray–Schauder orientation it must also match the eigenvalue formula.
pub fn check_normalization(l: &Matrix, omega: &BoxDomain, eps: &Orientation) -> Result<bool> {
    let f = PolynomialMap::linear(l)?;
    let t = AdmissibleTern::new(f, omega.clone(), eps.clone())?;
    let degree = degree_regular(&t)?;
    let expected = if omega.contains_origin() {
        eps.evaluate(l)?.to_i64()
    } else {
        0
    };
    let mut ok = degree == expected;
    if *eps == ls_orientation(l.rows()) {
        ok &= ls_degree_linear(l, omega)? == degree;
    }
    Ok(ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityOutcome {
    pub axis: usize,
    pub cut: Rational,
    pub whole: i64,
    pub left: i64,
    pub right: i64,
}

impl AdditivityOutcome {
    pub fn holds(&self) -> bool {
        self.whole == self.left + self.right
    }
}

const CUT_FRACTIONS: [(i64, i64); 7] = [(1, 2), (1, 3), (2, 3), (1, 5), (4, 5), (3, 7), (5, 8)];

/// Splits `Ω` by the first coordinate hyperplane certified free of zeros.
pub fn check_additivity(t: &AdmissibleTern) -> Result<Option<AdditivityOutcome>> {
    let omega = t.domain();
    let f = t.map();
    let whole = degree_regular(t)?;
    for axis in 0..omega.dimension() {
        let side = &omega.sides()[axis];
        for (p, q) in CUT_FRACTIONS {
            let cut = side.a() + side.width() * ratio(p, q);
            let plane = omega.cut(axis, &cut);
            if exclusion_margin(
                vec![plane],
                |b| f.eval_interval(b),
                &CertifyConfig::default(),
            )
            .is_none()
            {
                continue;
            }
            let (lo, hi) = omega.split(axis, &cut)?;
            let left = degree_regular(&t.with_domain(lo)?)?;
            let right = degree_regular(&t.with_domain(hi)?)?;
            return Ok(Some(AdditivityOutcome {
                axis,
                cut,
                whole,
                left,
                right,
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcisionOutcome {
    pub whole: i64,
    /// Sub-box holding every zero; `None` when there are no zeros and the
    /// comparison is against the empty region.
    pub inner: Option<BoxDomain>,
    pub inner_degree: i64,
}

impl ExcisionOutcome {
    pub fn holds(&self) -> bool {
        self.whole == self.inner_degree
    }
}

/// Compares the degree on `Ω` with the degree on a small box around the zeros.
pub fn check_excision(t: &AdmissibleTern) -> Result<Option<ExcisionOutcome>> {
    let whole = degree_regular(t)?;
    let zeros = find_zeros(t.map(), t.domain())?;
    let Some(hull) = zeros.hull() else {
        let inner_degree = degree_over(t.map(), &[], t.orientation())?;
        return Ok(Some(ExcisionOutcome {
            whole,
            inner: None,
            inner_degree,
        }));
    };
    let closure = t.domain().closure();
    let min_side = t
        .domain()
        .sides()
        .iter()
        .map(Interval::width)
        .min()
        .expect("nonempty box");
    for k in [8, 32, 128] {
        let r = &min_side / int(k);
        let grown: Vec<RatInterval> = hull.iter().map(|iv| iv.inflate(&r)).collect();
        let clipped = box_intersect(&grown, &closure).expect("zeros lie in the domain");
        let Ok(inner) = BoxDomain::from_intervals(&clipped) else {
            continue;
        };
        let Ok(sub) = t.with_domain(inner.clone()) else {
            continue;
        };
        let inner_degree = degree_regular(&sub)?;
        return Ok(Some(ExcisionOutcome {
            whole,
            inner: Some(inner),
            inner_degree,
        }));
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HomotopyCertificate {
    /// `det((1-t)A + tB) ≠ 0` on `[0, 1]`, with `0 ∈ Ω`.
    Determinant,
    /// Interval enclosures over `[0, 1] × ∂Ω` avoid 0.
    Interval,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyOutcome {
    pub certificate: HomotopyCertificate,
    pub start: i64,
    pub end: i64,
}

impl HomotopyOutcome {
    pub fn holds(&self) -> bool {
        self.start == self.end
    }
}

/// Exact admissibility of `(1-t)A x + tB x` on a box containing 0: a
/// boundary zero exists exactly when some `(1-t)A + tB` is singular.
pub fn certify_linear_homotopy(a: &Matrix, b: &Matrix, omega: &BoxDomain) -> Result<Option<bool>> {
    if !omega.contains_origin() {
        return Ok(None);
    }
    let det = PolyMatrixPath::segment(a, b)?.det_poly();
    if det.is_zero() {
        return Ok(Some(false));
    }
    Ok(Some(real_roots_in(&det, &Interval::unit())?.is_empty()))
}

fn homotopy_config() -> CertifyConfig {
    CertifyConfig {
        depth_bits: 14,
        max_pieces: 60_000,
    }
}

fn certify_interval_homotopy(f: &PolynomialMap, g: &PolynomialMap, omega: &BoxDomain) -> bool {
    let n = omega.dimension();
    let pieces = omega
        .facets()
        .into_iter()
        .map(|mut facet| {
            facet.push(RatInterval::new(Rational::zero(), Rational::one()));
            facet
        })
        .collect();
    let eval = |b: &[RatInterval]| {
        let x = &b[..n];
        let t = &b[n];
        let s = &RatInterval::point(Rational::one()) - t;
        f.eval_interval(x)
            .iter()
            .zip(g.eval_interval(x))
            .map(|(fi, gi)| &(&s * fi) + &(t * &gi))
            .collect()
    };
    exclusion_margin(pieces, eval, &homotopy_config()).is_some()
}

/// Degree at both ends of `(1-t) f + t g` on `Ω`, when the homotopy is
/// certified admissible; `None` when certification fails.
pub fn check_homotopy(
    f: &PolynomialMap,
    g: &PolynomialMap,
    omega: &BoxDomain,
    eps: &Orientation,
) -> Result<Option<HomotopyOutcome>> {
    let certificate = match (f.as_linear(), g.as_linear()) {
        (Some(a), Some(b)) if omega.contains_origin() => {
            if certify_linear_homotopy(&a, &b, omega)? != Some(true) {
                return Ok(None);
            }
            HomotopyCertificate::Determinant
        }
        _ => {
            if !certify_interval_homotopy(f, g, omega) {
                return Ok(None);
            }
            HomotopyCertificate::Interval
        }
    };
    let start = degree_regular(&AdmissibleTern::new(f.clone(), omega.clone(), eps.clone())?)?;
    let end = degree_regular(&AdmissibleTern::new(g.clone(), omega.clone(), eps.clone())?)?;
    Ok(Some(HomotopyOutcome {
        certificate,
        start,
        end,
    }))
}

/// Number of random invertible operators used for normalization.
pub const NORMALIZATION_SAMPLES: usize = 100;

const STREAM_NORMALIZATION: u64 = 0x4e4f_524d;
const STREAM_HOMOTOPY: u64 = 0x484f_4d4f;

/// Runs every axiom check over `corpus`, plus `NORMALIZATION_SAMPLES` random
/// linear terns and homotopies between corpus maps sharing a domain and
/// orientation, and small constant perturbations of each corpus map.
pub fn verify_degree_axioms(corpus: &[AdmissibleTern], seed: u64) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    let bounds = CoefficientBounds::default();

    for i in 0..NORMALIZATION_SAMPLES {
        let mut rng = stream_rng(seed, STREAM_NORMALIZATION, i as u64);
        let n = 1 + i % 3;
        let l = random_invertible_matrix(&mut rng, n, bounds);
        let omega = if i % 5 == 4 {
            // A box missing the origin.
            BoxDomain::new(vec![Interval::new(int(1), int(2))?; n])
        } else {
            BoxDomain::cube(n, int(1))?
        };
        let eps = if i % 2 == 0 {
            ls_orientation(n)
        } else {
            let sign = if i % 4 == 1 { Sign::Plus } else { Sign::Minus };
            Orientation::new(random_invertible_matrix(&mut rng, n, bounds), sign)?
        };
        let ok = check_normalization(&l, &omega, &eps)?;
        if !ok {
            report
                .witnesses
                .push(format!("normalization: L={l:?} on {omega:?}"));
        }
        report.normalization.record(Some(ok));
    }
    for t in corpus {
        if let Some(lin) = t.map().as_linear() {
            let ok = check_normalization(&lin, t.domain(), t.orientation())?;
            if !ok {
                report.witnesses.push(format!("normalization: {}", t.map()));
            }
            report.normalization.record(Some(ok));
        }

        let add = check_additivity(t)?;
        if let Some(a) = &add {
            if !a.holds() {
                report.witnesses.push(format!(
                    "additivity: {} split at x{}={}: {} != {} + {}",
                    t.map(),
                    a.axis + 1,
                    a.cut,
                    a.whole,
                    a.left,
                    a.right
                ));
            }
        }
        report.additivity.record(add.map(|a| a.holds()));

        let exc = check_excision(t)?;
        if let Some(e) = &exc {
            if !e.holds() {
                report.witnesses.push(format!(
                    "excision: {}: {} != {}",
                    t.map(),
                    e.whole,
                    e.inner_degree
                ));
            }
        }
        report.excision.record(exc.map(|e| e.holds()));

        let empty = degree_over(t.map(), &[], t.orientation())? == 0;
        report.empty_set.record(Some(empty));
    }

    let record_homotopy = |report: &mut AxiomReport,
                           f: &PolynomialMap,
                           g: &PolynomialMap,
                           t: &AdmissibleTern|
     -> Result<()> {
        let outcome = check_homotopy(f, g, t.domain(), t.orientation())?;
        if let Some(h) = &outcome {
            if !h.holds() {
                report
                    .witnesses
                    .push(format!("homotopy: {f} -> {g}: {} != {}", h.start, h.end));
            }
        }
        report.homotopy.record(outcome.map(|h| h.holds()));
        Ok(())
    };
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i + 1..] {
            if a.domain() == b.domain() && a.orientation() == b.orientation() && a.map() != b.map()
            {
                record_homotopy(&mut report, a.map(), b.map(), a)?;
            }
        }
    }
    for (i, t) in corpus.iter().enumerate() {
        // g = f - c with ‖c‖_∞ below half the boundary margin.
        let mut rng = stream_rng(seed, STREAM_HOMOTOPY, i as u64);
        let half = t.margin() / int(2);
        let c: Vec<Rational> = (0..t.dimension())
            .map(|_| {
                let u = random_rational(
                    &mut rng,
                    CoefficientBounds {
                        numerator: 9,
                        denominator: 10,
                    },
                );
                &half * u / int(10)
            })
            .collect();
        let g = t.map().shifted(&c);
        record_homotopy(&mut report, t.map(), &g, t)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tern(components: &[&str], r: i64) -> AdmissibleTern {
        let f = PolynomialMap::parse(components).unwrap();
        let n = f.dimension();
        AdmissibleTern::new(f, BoxDomain::cube(n, int(r)).unwrap(), ls_orientation(n)).unwrap()
    }

    #[test]
    fn identity_corpus_passes() {
        let report = verify_degree_axioms(&[tern(&["x"], 1)], 0).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.normalization.passed, NORMALIZATION_SAMPLES + 1);
        assert_eq!(degree_regular(&tern(&["x"], 1)), Ok(1));
    }

    #[test]
    fn quadratic_split_at_zero() {
        let t = tern(&["x^2 - 1"], 2);
        let a = check_additivity(&t).unwrap().unwrap();
        assert_eq!(
            (a.cut.clone(), a.whole, a.left, a.right),
            (int(0), 0, -1, 1)
        );
        let e = check_excision(&t).unwrap().unwrap();
        assert!(e.holds());
    }

    #[test]
    fn worked_homotopy() {
        let f = PolynomialMap::parse(&["x^2 - 1"]).unwrap();
        let g = PolynomialMap::parse(&["x^2 - 1 + 1/4*x"]).unwrap();
        let d = BoxDomain::cube(1, int(2)).unwrap();
        let h = check_homotopy(&f, &g, &d, &ls_orientation(1))
            .unwrap()
            .unwrap();
        assert_eq!((h.start, h.end), (0, 0));
        assert_eq!(h.certificate, HomotopyCertificate::Interval);
        // x -> -x passes through the singular operator 0.
        let id = Matrix::identity(1);
        assert_eq!(
            certify_linear_homotopy(&id, &-&id, &BoxDomain::cube(1, int(1)).unwrap()),
            Ok(Some(false))
        );
    }
}

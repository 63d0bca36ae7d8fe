//! Degree of admissible terns in ℝᴺ: the regular-value sum, the
//! multiplicity formula along straight connecting paths, the Leray–Schauder
//! eigenvalue formula for linear maps, and the regular-value perturbation for
//! critical zeros.

mod axioms;
mod corpus;
mod domain;
mod interval;
mod polymap;
mod tern;
mod zeros;

pub use axioms::{
    certify_linear_homotopy, check_additivity, check_excision, check_homotopy, check_normalization,
    verify_degree_axioms, AdditivityOutcome, AxiomReport, AxiomTally, ExcisionOutcome,
    HomotopyCertificate, HomotopyOutcome, NORMALIZATION_SAMPLES,
};
pub use corpus::{perturbation_corpus, regular_corpus, CorpusEntry};
pub use domain::BoxDomain;
pub use interval::{interval_det, IntervalVector, RatInterval};
pub use polymap::{MultiPoly, PolynomialMap};
pub use tern::{boundary_margin, exclusion_margin, AdmissibleTern, CertifyConfig};
pub use zeros::{
    find_zeros, find_zeros_with, RegularZero, RegularZeroSet, SolverConfig, ZeroLocation,
};

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{
    count_with_multiplicity_open, dyadic_unit, real_roots_in, Matrix, Rational, RootLocation,
};
use crate::multiplicity::malg_classical;
use crate::paths::{Interval, PolyMatrixPath};
use crate::sign::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedZero {
    pub zero: RegularZero,
    pub epsilon: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: i64,
    pub zeros: Vec<SignedZero>,
}

/// `Σ ε(Df(x))` over the zeros of `f` in `Ω`.
pub fn degree_regular_report(t: &AdmissibleTern) -> Result<DegreeReport> {
    let set = find_zeros(t.map(), t.domain())?;
    let eps = t.orientation();
    if eps.is_trivial() {
        // No invertible derivative can occur, so there is no regular zero.
        return if set.is_empty() {
            Ok(DegreeReport {
                degree: 0,
                zeros: Vec::new(),
            })
        } else {
            Err(Error::DegenerateOrientation)
        };
    }
    let mut degree = 0i64;
    let mut zeros = Vec::with_capacity(set.len());
    for zero in set.zeros {
        let epsilon = eps.evaluate(&zero.jacobian)?;
        degree += epsilon.to_i64();
        zeros.push(SignedZero { zero, epsilon });
    }
    Ok(DegreeReport { degree, zeros })
}

pub fn degree_regular(t: &AdmissibleTern) -> Result<i64> {
    degree_regular_report(t).map(|r| r.degree)
}

/// Sum of degrees over disjoint boxes; the empty list has degree 0.
pub fn degree_over(
    f: &PolynomialMap,
    regions: &[BoxDomain],
    eps: &crate::orientation::Orientation,
) -> Result<i64> {
    let mut total = 0;
    for omega in regions {
        let t = AdmissibleTern::new(f.clone(), omega.clone(), eps.clone())?;
        total += degree_regular(&t)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiZero {
    pub zero: RegularZero,
    /// Straight path from `Df(x)` at `λ = 0` to `L` at `λ = 1`.
    pub path: PolyMatrixPath,
    /// Total multiplicity of the path spectrum in `(0, 1)`.
    pub chi_sum: usize,
    pub parity: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiDegreeReport {
    pub degree: i64,
    pub reference: Option<Matrix>,
    pub reference_sign: Option<Sign>,
    pub zeros: Vec<ChiZero>,
}

/// `ε(L) · Σ_x (-1)^{Σχ}` along `segment(Df(x), L)`.
///
/// `reference` defaults to `Df` at the first zero.
pub fn degree_via_chi_report(
    t: &AdmissibleTern,
    reference: Option<&Matrix>,
) -> Result<ChiDegreeReport> {
    if let Some(l) = reference {
        let n = l.require_square()?;
        if n != t.dimension() {
            return Err(Error::DimensionMismatch {
                expected: t.dimension(),
                found: n,
            });
        }
        if l.det()?.is_zero() {
            return Err(Error::SingularReference);
        }
    }
    let set = find_zeros(t.map(), t.domain())?;
    let Some(l) = reference
        .cloned()
        .or_else(|| set.zeros.first().map(|z| z.jacobian.clone()))
    else {
        return Ok(ChiDegreeReport {
            degree: 0,
            reference: None,
            reference_sign: None,
            zeros: Vec::new(),
        });
    };
    let eps_l = t.orientation().evaluate(&l)?;
    let mut sum = 0i64;
    let mut zeros = Vec::with_capacity(set.len());
    for zero in set.zeros {
        let path = PolyMatrixPath::segment(&zero.jacobian, &l)?;
        let chi_sum =
            count_with_multiplicity_open(&path.det_poly(), &Rational::zero(), &Rational::one());
        let parity = Sign::from_exponent(chi_sum);
        sum += parity.to_i64();
        zeros.push(ChiZero {
            zero,
            path,
            chi_sum,
            parity,
        });
    }
    Ok(ChiDegreeReport {
        degree: eps_l.to_i64() * sum,
        reference: Some(l),
        reference_sign: Some(eps_l),
        zeros,
    })
}

pub fn degree_via_chi(t: &AdmissibleTern, reference: Option<&Matrix>) -> Result<i64> {
    degree_via_chi_report(t, reference).map(|r| r.degree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsReport {
    pub degree: i64,
    /// Real eigenvalues of `I - L` in `(1, ∞)` with algebraic multiplicities.
    pub eigenvalues: Vec<(RootLocation, usize)>,
}

/// `(-1)^{Σ m_alg}` over the eigenvalues of `I - L` in `(1, ∞)`, or 0 when
/// `0 ∉ Ω`.
pub fn ls_degree_linear_report(l: &Matrix, omega: &BoxDomain) -> Result<LsReport> {
    let n = l.require_square()?;
    if n != omega.dimension() {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega.dimension(),
        });
    }
    if l.det()?.is_zero() {
        return Err(Error::SingularOperator);
    }
    if !omega.contains_origin() {
        return Ok(LsReport {
            degree: 0,
            eigenvalues: Vec::new(),
        });
    }
    let k = &Matrix::identity(n) - l;
    let charpoly = PolyMatrixPath::shifted_operator(&k)?.det_poly();
    let bound = charpoly.root_bound();
    let mut eigenvalues = Vec::new();
    let mut total = 0usize;
    if bound > Rational::one() {
        for root in real_roots_in(&charpoly, &Interval::new(Rational::one(), bound)?)? {
            // det(I - K) = det L ≠ 0, so 1 is never an eigenvalue; the root
            // bound is strict.
            if let RootLocation::Exact(mu) = &root.location {
                let classical = malg_classical(&k, mu)?;
                if classical.malg != root.multiplicity {
                    return Err(Error::Disagreement {
                        first: root.multiplicity as i64,
                        second: classical.malg as i64,
                    });
                }
            }
            total += root.multiplicity;
            eigenvalues.push((root.location, root.multiplicity));
        }
    }
    Ok(LsReport {
        degree: Sign::from_exponent(total).to_i64(),
        eigenvalues,
    })
}

pub fn ls_degree_linear(l: &Matrix, omega: &BoxDomain) -> Result<i64> {
    ls_degree_linear_report(l, omega).map(|r| r.degree)
}

/// Number of sampling attempts before giving up on finding a regular value.
pub const MAX_PERTURBATION_RETRIES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbedSample {
    pub x0: Vec<Rational>,
    pub degree: i64,
    pub zeros: Vec<SignedZero>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbedReport {
    pub degree: i64,
    pub margin: Rational,
    /// Samples are drawn from the open ∞-ball of this radius (at most η/2).
    pub radius: Rational,
    pub samples: [PerturbedSample; 2],
    pub rejected: usize,
}

/// Largest power of two not exceeding `x > 0`.
fn pow2_floor(x: &Rational) -> Rational {
    let mut r = Rational::one();
    while &r > x {
        r /= Rational::from_integer(2.into());
    }
    while &(&r * Rational::from_integer(2.into())) <= x {
        r *= Rational::from_integer(2.into());
    }
    r
}

const SAMPLE_BITS: u32 = 20;

fn sample_point(rng: &mut ChaCha8Rng, n: usize, radius: &Rational) -> Vec<Rational> {
    let m: i64 = 1 << SAMPLE_BITS;
    (0..n)
        .map(|_| {
            let k: i64 = rng.gen_range(-m + 1..m);
            radius * Rational::from_integer(k.into()) * dyadic_unit(SAMPLE_BITS)
        })
        .collect()
}

/// `deg(f - x0, Ω, ε)` for two independent regular values `x0` near 0.
pub fn degree_perturbed(
    f: &PolynomialMap,
    omega: &BoxDomain,
    eps: &crate::orientation::Orientation,
    seed: u64,
) -> Result<PerturbedReport> {
    if f.dimension() != omega.dimension() {
        return Err(Error::DimensionMismatch {
            expected: f.dimension(),
            found: omega.dimension(),
        });
    }
    let margin = boundary_margin(f, omega).ok_or(Error::MarginUnderflow)?;
    if !margin.is_positive() {
        return Err(Error::MarginUnderflow);
    }
    let radius = pow2_floor(&(&margin / Rational::from_integer(2.into())));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejected = 0usize;
    let mut samples = Vec::with_capacity(2);
    while samples.len() < 2 {
        if rejected >= MAX_PERTURBATION_RETRIES {
            return Err(Error::MarginUnderflow);
        }
        let x0 = sample_point(&mut rng, f.dimension(), &radius);
        let shifted = f.shifted(&x0);
        // ‖x0‖_∞ < η, so the shifted map is admissible on Ω.
        let t = AdmissibleTern::new(shifted, omega.clone(), eps.clone())?;
        match degree_regular_report(&t) {
            Ok(r) => samples.push(PerturbedSample {
                x0,
                degree: r.degree,
                zeros: r.zeros,
            }),
            Err(Error::IrregularZero { .. } | Error::ResolutionExceeded { .. }) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
    let second = samples.pop().expect("two samples");
    let first = samples.pop().expect("two samples");
    if first.degree != second.degree {
        return Err(Error::Disagreement {
            first: first.degree,
            second: second.degree,
        });
    }
    Ok(PerturbedReport {
        degree: first.degree,
        margin,
        radius,
        samples: [first, second],
        rejected,
    })
}

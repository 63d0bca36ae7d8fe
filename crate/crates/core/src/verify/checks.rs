//! One function per campaign check. Each instance draws its data from its own
//! random stream and reports pass, fail or skip.

use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::generate::{
    generate_jordan_seed, generate_random_path, random_integer_vector, random_interior_point,
    random_interval, random_unimodular, PathRequest,
};
use super::{Campaign, CheckName};
use crate::degree::{
    check_additivity, check_excision, check_homotopy, check_normalization, degree_over,
    degree_regular, degree_via_chi, ls_degree_linear, regular_corpus, AdmissibleTern, BoxDomain,
    CorpusEntry, PolynomialMap,
};
use crate::error::Result;
use crate::format::{
    domain_spec, HomotopySpec, LinearOperatorSpec, MatrixPathSpec, Problem, ProblemFile, TernSpec,
};
use crate::linalg::{int, ratio, real_roots_in, Matrix, Rational};
use crate::multiplicity::{
    chi_det, chi_smith, chi_transversal, is_k_transversal, malg_classical, rank_one_normalizer,
    rank_one_projection, Chi,
};
use crate::orientation::{ls_orientation, orientation_consistency_check, Orientation};
use crate::parity::{
    homotopy_parity_check, parity_endpoint_sign, parity_interval, parity_local, parity_local_at,
    parity_split_check, parity_with_spectrum,
};
use crate::paths::{AdmissiblePath, BivariatePath, Interval, PolyMatrixPath};
use crate::random::{random_invertible_matrix, random_rational, stream_rng, CoefficientBounds};
use crate::sign::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub input: Option<ProblemFile>,
}

/// Per-instance random state and campaign ranges.
struct Ctx<'a> {
    campaign: &'a Campaign,
    index: usize,
    rng: ChaCha8Rng,
}

impl Ctx<'_> {
    fn dim(&mut self, cap: usize) -> usize {
        let [lo, hi] = self.campaign.dims;
        self.rng.gen_range(lo.min(cap)..=hi.min(cap))
    }

    fn degree(&mut self) -> usize {
        let [lo, hi] = self.campaign.degrees;
        self.rng.gen_range(lo..=hi)
    }

    fn bounds(&self) -> CoefficientBounds {
        self.campaign.bounds
    }

    fn path(&mut self, n: usize, degree: usize, request: &PathRequest) -> PolyMatrixPath {
        let b = self.bounds();
        generate_random_path(&mut self.rng, n, degree, b, request)
    }

    fn rational(&mut self) -> Rational {
        let b = self.bounds();
        random_rational(&mut self.rng, b)
    }

    fn invertible(&mut self, n: usize) -> Matrix {
        let b = self.bounds();
        random_invertible_matrix(&mut self.rng, n, b)
    }
}

pub(crate) fn run_instance(check: CheckName, campaign: &Campaign, index: usize) -> Outcome {
    let mut ctx = Ctx {
        campaign,
        index,
        rng: stream_rng(campaign.seed, check.stream(), index as u64),
    };
    let mut input = None;
    let result = match check {
        CheckName::ChiAgreement => chi_agreement(&mut ctx, &mut input),
        CheckName::ChiProduct => chi_product(&mut ctx, &mut input),
        CheckName::ChiNormalization => chi_normalization(&mut ctx, &mut input),
        CheckName::MalgEquivalence => malg_equivalence(&mut ctx, &mut input),
        CheckName::ParityOracle => parity_oracle(&mut ctx, &mut input),
        CheckName::ParityProduct => parity_product(&mut ctx, &mut input),
        CheckName::ParitySplit => parity_split(&mut ctx, &mut input),
        CheckName::ParityHomotopy => parity_homotopy(&mut ctx, &mut input),
        CheckName::OrientationC3 => orientation_c3(&mut ctx, &mut input),
        CheckName::DegreeFormulaEquivalence => degree_formula_equivalence(&mut ctx, &mut input),
        CheckName::DegreeAxioms => degree_axioms(&mut ctx, &mut input),
        CheckName::LsFormula => ls_formula(&mut ctx, &mut input),
    };
    let verdict = match result {
        Ok(v) => v,
        Err(e) => Verdict::Fail(format!("unexpected error: {e}")),
    };
    Outcome { verdict, input }
}

fn path_file(path: &PolyMatrixPath, interval: Option<&Interval>) -> Option<ProblemFile> {
    Some(ProblemFile::new(Problem::MatrixPath(
        MatrixPathSpec::from_path(path, interval),
    )))
}

fn tern_file(t: &AdmissibleTern) -> Option<ProblemFile> {
    Some(ProblemFile::new(Problem::Tern(TernSpec::from_tern(t))))
}

fn operator_file(l: &Matrix, omega: &BoxDomain) -> Option<ProblemFile> {
    Some(ProblemFile::new(Problem::LinearOperator(
        LinearOperatorSpec {
            matrix: l
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(crate::format::Q).collect())
                .collect(),
            domain: Some(domain_spec(omega)),
        },
    )))
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Option<Verdict> {
    (!ok).then(|| Verdict::Fail(message()))
}

macro_rules! require {
    ($cond:expr, $($fmt:tt)+) => {
        if let Some(v) = ensure($cond, || format!($($fmt)+)) {
            return Ok(v);
        }
    };
}

fn chi_sum(a: Chi, b: Chi) -> Chi {
    match (a, b) {
        (Chi::Finite(x), Chi::Finite(y)) => Chi::Finite(x + y),
        _ => Chi::Infinite,
    }
}

/// A rational root of `det L` if one exists and the coin says so, otherwise
/// a random rational.
fn probe_point(ctx: &mut Ctx, path: &PolyMatrixPath) -> Result<Rational> {
    let det = path.det_poly();
    if !det.is_zero() && det.degree().unwrap_or(0) > 0 {
        let bound = det.root_bound();
        let roots = real_roots_in(&det, &Interval::new(-&bound, bound)?)?;
        let exact: Vec<Rational> = roots
            .iter()
            .filter_map(|r| r.location.exact().cloned())
            .collect();
        if !exact.is_empty() {
            return Ok(exact[ctx.rng.gen_range(0..exact.len())].clone());
        }
    }
    Ok(ctx.rational())
}

/// χ by determinant order, Smith form and (when applicable) transversal formula.
fn chi_agreement(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_SMITH_DIMENSION);
    let d = ctx.degree();
    let (path, lambda0) = match ctx.index % 3 {
        0 => (
            ctx.path(n, d, &PathRequest::SingularAtZero),
            Rational::zero(),
        ),
        1 => {
            let p = ctx.path(n, d, &PathRequest::Any);
            let l = probe_point(ctx, &p)?;
            (p, l)
        }
        _ => {
            let p = ctx.path(n, d, &PathRequest::Any);
            let l = ctx.rational();
            (p, l)
        }
    };
    *input = path_file(&path, None);
    let by_det = chi_det(&path, &lambda0);
    match (by_det, chi_smith(&path, &lambda0)) {
        (Chi::Infinite, Err(crate::Error::IdenticallySingular)) => Ok(Verdict::Pass),
        (Chi::Finite(k), Ok(smith)) => {
            require!(
                smith.chi == Chi::Finite(k),
                "at {lambda0}: chi_det={k}, chi_smith={}",
                smith.chi
            );
            let total: usize = smith.partial_multiplicities.iter().sum();
            require!(
                total == k,
                "at {lambda0}: partial multiplicities sum to {total}, chi={k}"
            );
            if is_k_transversal(&path, &lambda0).is_some() {
                let t = chi_transversal(&path, &lambda0)?;
                require!(t == k, "at {lambda0}: chi_transversal={t}, chi_det={k}");
            }
            Ok(Verdict::Pass)
        }
        (a, b) => Ok(Verdict::Fail(format!(
            "at {lambda0}: chi_det={a}, chi_smith={b:?}"
        ))),
    }
}

/// χ[LM] = χ[L] + χ[M].
fn chi_product(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_SMITH_DIMENSION);
    let request = |singular: bool| {
        if singular {
            PathRequest::SingularAtZero
        } else {
            PathRequest::Any
        }
    };
    let (dl, dm) = (ctx.degree(), ctx.degree());
    let l = ctx.path(n, dl, &request(ctx.index.is_multiple_of(2)));
    let m = ctx.path(n, dm, &request(ctx.index.is_multiple_of(3)));
    let lambda0 = if ctx.index % 4 == 3 {
        ctx.rational()
    } else {
        Rational::zero()
    };
    let lm = l.compose(&m)?;
    *input = path_file(&lm, None);
    let expected = chi_sum(chi_det(&l, &lambda0), chi_det(&m, &lambda0));
    let by_det = chi_det(&lm, &lambda0);
    require!(
        by_det == expected,
        "at {lambda0}: chi[LM]={by_det}, chi[L]+chi[M]={expected}"
    );
    if let Chi::Finite(k) = expected {
        let smith = chi_smith(&lm, &lambda0)?.chi;
        require!(
            smith == Chi::Finite(k),
            "at {lambda0}: Smith chi[LM]={smith}, expected {k}"
        );
    }
    Ok(Verdict::Pass)
}

/// χ[(λ-λ0)P + I - P; λ0] = 1 for a rank-one projection conjugated by a
/// random unimodular matrix.
fn chi_normalization(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_SMITH_DIMENSION);
    let p = loop {
        let u = random_integer_vector(&mut ctx.rng, n);
        let v = random_integer_vector(&mut ctx.rng, n);
        if let Ok(p) = rank_one_projection(&u, &v) {
            break p;
        }
    };
    let (w, w_inv) = random_unimodular(&mut ctx.rng, n);
    let p = &(&w * &p) * &w_inv;
    let lambda0 = ctx.rational();
    let e = rank_one_normalizer(&p, &lambda0)?;
    *input = path_file(&e, None);
    let by_det = chi_det(&e, &lambda0);
    require!(by_det == Chi::Finite(1), "chi_det={by_det} at {lambda0}");
    let smith = chi_smith(&e, &lambda0)?;
    require!(
        smith.chi == Chi::Finite(1),
        "chi_smith={} at {lambda0}",
        smith.chi
    );
    let t = chi_transversal(&e, &lambda0)?;
    require!(t == 1, "chi_transversal={t} at {lambda0}");
    Ok(Verdict::Pass)
}

/// χ[λI - K; μ] = m_alg[K; μ] = construction truth for Jordan-seeded K.
fn malg_equivalence(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let seed = generate_jordan_seed(&mut ctx.rng, n);
    let path = PolyMatrixPath::shifted_operator(&seed.matrix)?;
    *input = path_file(&path, None);
    let mut probes = seed.multiplicities();
    let outsider = loop {
        let mu = ctx.rational();
        if seed.multiplicity_of(&mu) == 0 {
            break mu;
        }
    };
    probes.push((outsider, 0));
    for (mu, truth) in probes {
        let by_det = chi_det(&path, &mu);
        let classical = malg_classical(&seed.matrix, &mu)?.malg;
        require!(
            by_det == Chi::Finite(truth) && classical == truth,
            "at mu={mu}: chi_det={by_det}, malg_classical={classical}, truth={truth}"
        );
    }
    Ok(Verdict::Pass)
}

/// Root-count parity against endpoint signs and the spectrum, plus the
/// δ-isolated equivalence at every eigenvalue.
fn parity_oracle(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let d = ctx.degree();
    let iv = random_interval(&mut ctx.rng);
    let path = ctx.path(n, d, &PathRequest::Admissible(iv.clone()));
    *input = path_file(&path, Some(&iv));
    let ap = AdmissiblePath::new(path.clone(), iv)?;
    let by_roots = parity_interval(&ap);
    let oracle = parity_endpoint_sign(&ap);
    require!(
        by_roots == oracle,
        "parity_interval={by_roots}, endpoint sign={oracle}"
    );
    let (by_spectrum, spec) = parity_with_spectrum(&ap)?;
    require!(
        by_spectrum == oracle && Sign::from_exponent(spec.total_chi()) == oracle,
        "spectrum parity={by_spectrum} (total chi {}), endpoint sign={oracle}",
        spec.total_chi()
    );
    for ev in &spec.eigenvalues {
        let local = parity_local_at(&path, ev)?;
        let lo = Sign::of(&path.det_at(local.window.a()));
        let hi = Sign::of(&path.det_at(local.window.b()));
        require!(
            lo.is_some() && hi.is_some(),
            "window {:?} ends on an eigenvalue",
            local.window
        );
        let change = lo != hi;
        require!(
            (local.value == Sign::Minus) == change,
            "local parity {} at {:?} but det sign change={change}",
            local.value,
            ev.location
        );
        require!(
            local.value == Sign::from_exponent(local.chi),
            "local parity {} with chi {}",
            local.value,
            local.chi
        );
    }
    Ok(Verdict::Pass)
}

/// σ(LM) = σ(L)σ(M), σ(E, λ0) = -1 and σ(L, c) = +1 at an invertible point.
fn parity_product(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let (dl, dm) = (ctx.degree(), ctx.degree());
    let iv = random_interval(&mut ctx.rng);
    let l = ctx.path(n, dl, &PathRequest::Admissible(iv.clone()));
    let m = ctx.path(n, dm, &PathRequest::Admissible(iv.clone()));
    let lm = l.compose(&m)?;
    *input = path_file(&lm, Some(&iv));
    let sl = parity_interval(&AdmissiblePath::new(l.clone(), iv.clone())?);
    let sm = parity_interval(&AdmissiblePath::new(m, iv.clone())?);
    let slm = parity_interval(&AdmissiblePath::new(lm, iv.clone())?);
    require!(
        slm == sl * sm,
        "sigma(LM)={slm}, sigma(L)={sl}, sigma(M)={sm}"
    );

    let at_end = parity_local(&l, iv.a())?.value;
    require!(
        at_end == Sign::Plus,
        "local parity {at_end} at invertible point {}",
        iv.a()
    );
    let p = loop {
        let u = random_integer_vector(&mut ctx.rng, n);
        let v = random_integer_vector(&mut ctx.rng, n);
        if let Ok(p) = rank_one_projection(&u, &v) {
            break p;
        }
    };
    let lambda0 = ctx.rational();
    let e = rank_one_normalizer(&p, &lambda0)?;
    let se = parity_local(&e, &lambda0)?.value;
    require!(se == Sign::Minus, "normalizer parity {se} at {lambda0}");
    Ok(Verdict::Pass)
}

/// σ(L, [a, b]) = σ(L, [a, c]) σ(L, [c, b]).
fn parity_split(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let d = ctx.degree();
    let iv = random_interval(&mut ctx.rng);
    let path = ctx.path(n, d, &PathRequest::Admissible(iv.clone()));
    *input = path_file(&path, Some(&iv));
    let ap = AdmissiblePath::new(path.clone(), iv.clone())?;
    for _ in 0..32 {
        let c = random_interior_point(&mut ctx.rng, &iv, 64);
        if path.det_at(&c).is_zero() {
            continue;
        }
        let s = parity_split_check(&ap, &c)?;
        require!(
            s.holds(),
            "split at {c}: whole {}, left {}, right {}",
            s.whole,
            s.left,
            s.right
        );
        return Ok(Verdict::Pass);
    }
    Ok(Verdict::Skip("no invertible split point found".into()))
}

/// Equal end parities of `H(t, λ) = L(λ) + t s P(λ)`, with `s` halved until
/// the endpoint determinants have no root in `t ∈ [0, 1]`.
fn parity_homotopy(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let d = ctx.degree();
    let iv = random_interval(&mut ctx.rng);
    let l = ctx.path(n, d, &PathRequest::Admissible(iv.clone()));
    let dp = ctx.degree();
    let p = ctx.path(n, dp, &PathRequest::Any);
    let mut s = int(1);
    for _ in 0..40 {
        let h = BivariatePath::new(vec![l.clone(), p.scale(&s)])?;
        if crate::parity::certify_homotopy(&h, &iv).is_ok() {
            *input = Some(ProblemFile::new(Problem::Homotopy(
                HomotopySpec::from_homotopy(&h, &iv),
            )));
            let (s0, s1) = homotopy_parity_check(&h, &iv)?;
            require!(s0 == s1, "sigma(H(0))={s0}, sigma(H(1))={s1}");
            let mid = parity_interval(&AdmissiblePath::new(h.section(&ratio(1, 2)), iv.clone())?);
            require!(mid == s0, "sigma(H(1/2))={mid}, sigma(H(0))={s0}");
            return Ok(Verdict::Pass);
        }
        s /= int(2);
    }
    Ok(Verdict::Skip("homotopy could not be certified".into()))
}

/// σ(L, [a, b]) = ε(L(a)) ε(L(b)) for ε⁺ and ε⁻, and ε⁺ ε⁻ = -1 pointwise.
fn orientation_c3(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let d = ctx.degree();
    let iv = random_interval(&mut ctx.rng);
    let path = ctx.path(n, d, &PathRequest::Admissible(iv.clone()));
    *input = path_file(&path, Some(&iv));
    let ap = AdmissiblePath::new(path, iv)?;
    let base = ctx.invertible(n);
    let plus = Orientation::new(base, Sign::Plus)?;
    let minus = plus.opposite();
    for eps in [&plus, &minus] {
        let v = orientation_consistency_check(eps, &ap)?;
        require!(
            v.passed,
            "sigma={} but eps(start)={}, eps(end)={}",
            v.parity,
            v.at_start,
            v.at_end
        );
    }
    let probe = ctx.invertible(n);
    for x in [ap.start(), ap.end(), probe] {
        let (a, b) = (plus.evaluate(&x)?, minus.evaluate(&x)?);
        require!(a * b == Sign::Minus, "eps+={a}, eps-={b} at {x:?}");
        let by_det = plus.evaluate_by_determinant(&x)?;
        require!(a == by_det, "eps+ by parity {a}, by determinant {by_det}");
    }
    Ok(Verdict::Pass)
}

fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(regular_corpus)
}

/// Corpus index pairs sharing a domain and orientation.
fn corpus_pairs() -> &'static [(usize, usize)] {
    static PAIRS: OnceLock<Vec<(usize, usize)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let c = corpus();
        let mut out = Vec::new();
        for i in 0..c.len() {
            for j in i + 1..c.len() {
                let (a, b) = (&c[i].tern, &c[j].tern);
                if a.domain() == b.domain()
                    && a.orientation() == b.orientation()
                    && a.map() != b.map()
                {
                    out.push((i, j));
                }
            }
        }
        out
    })
}

fn random_orientation(ctx: &mut Ctx, n: usize) -> Result<Orientation> {
    match ctx.rng.gen_range(0..3) {
        0 => Ok(ls_orientation(n)),
        k => {
            let base = ctx.invertible(n);
            Orientation::new(base, if k == 1 { Sign::Plus } else { Sign::Minus })
        }
    }
}

/// `(-1, 1)ᴺ` or a unit-radius box around a random center; the center
/// coordinates avoid ±1 so that 0 never lies on the boundary.
fn random_box(ctx: &mut Ctx, n: usize, centered: bool) -> Result<BoxDomain> {
    if centered {
        return BoxDomain::cube(n, int(1));
    }
    const CENTERS: [(i64, i64); 5] = [(-2, 1), (-1, 2), (0, 1), (1, 2), (2, 1)];
    let sides = (0..n)
        .map(|_| {
            let (p, q) = CENTERS[ctx.rng.gen_range(0..CENTERS.len())];
            let c = ratio(p, q);
            Interval::new(&c - int(1), &c + int(1))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoxDomain::new(sides))
}

/// Degree by parity along connecting paths equals the sign sum. Even
/// instances use random linear terns, odd instances walk the fixed corpus.
fn degree_formula_equivalence(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let tern = if ctx.index.is_multiple_of(2) {
        let n = ctx.dim(super::MAX_DIMENSION);
        let l = ctx.invertible(n);
        let centered = ctx.index.is_multiple_of(4);
        let omega = random_box(ctx, n, centered)?;
        let eps = random_orientation(ctx, n)?;
        match AdmissibleTern::new(PolynomialMap::linear(&l)?, omega, eps) {
            Ok(t) => t,
            Err(e) => return Ok(Verdict::Skip(format!("linear tern not certified: {e}"))),
        }
    } else {
        let c = corpus();
        c[(ctx.index / 2) % c.len()].tern.clone()
    };
    *input = tern_file(&tern);
    let reference = ctx.invertible(tern.dimension());
    let regular = degree_regular(&tern)?;
    let with_reference = degree_via_chi(&tern, Some(&reference))?;
    let default_reference = degree_via_chi(&tern, None)?;
    require!(
        regular == with_reference && regular == default_reference,
        "degree_regular={regular}, degree_via_chi={with_reference} (reference {reference:?}), with default reference {default_reference}"
    );
    Ok(Verdict::Pass)
}

/// Normalization on a random linear tern, then additivity, excision, empty
/// set and homotopy invariance on a corpus tern.
fn degree_axioms(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let l = ctx.invertible(n);
    let centered = ctx.index % 5 != 4;
    let omega = random_box(ctx, n, centered)?;
    let eps = random_orientation(ctx, n)?;
    *input = operator_file(&l, &omega);
    require!(
        check_normalization(&l, &omega, &eps)?,
        "normalization fails for L={l:?} on {omega:?}"
    );

    let c = corpus();
    let entry = &c[ctx.index % c.len()];
    let t = &entry.tern;
    *input = tern_file(t);
    if let Some(a) = check_additivity(t)? {
        require!(
            a.holds(),
            "{}: split at x{}={}: {} != {} + {}",
            entry.name,
            a.axis + 1,
            a.cut,
            a.whole,
            a.left,
            a.right
        );
    }
    if let Some(e) = check_excision(t)? {
        require!(
            e.holds(),
            "{}: excision {} != {}",
            entry.name,
            e.whole,
            e.inner_degree
        );
    }
    let empty = degree_over(t.map(), &[], t.orientation())?;
    require!(
        empty == 0,
        "{}: degree over the empty set is {empty}",
        entry.name
    );

    let (f, g, domain_tern) = if ctx.index.is_multiple_of(2) && !corpus_pairs().is_empty() {
        let pairs = corpus_pairs();
        let (i, j) = pairs[(ctx.index / 2) % pairs.len()];
        (c[i].tern.map().clone(), c[j].tern.map().clone(), &c[i].tern)
    } else {
        // g = f - x0 with ‖x0‖∞ below a twentieth of the boundary margin.
        let scale = t.margin() / int(20);
        let x0: Vec<Rational> = (0..t.dimension())
            .map(|_| {
                &scale
                    * random_rational(
                        &mut ctx.rng,
                        CoefficientBounds {
                            numerator: 9,
                            denominator: 10,
                        },
                    )
                    / int(10)
            })
            .collect();
        (t.map().clone(), t.map().shifted(&x0), t)
    };
    if let Some(h) = check_homotopy(&f, &g, domain_tern.domain(), domain_tern.orientation())? {
        require!(h.holds(), "homotopy {f} -> {g}: {} != {}", h.start, h.end);
    }
    Ok(Verdict::Pass)
}

/// Leray–Schauder degree of a linear map: sign det L when 0 ∈ Ω, else 0.
fn ls_formula(ctx: &mut Ctx, input: &mut Option<ProblemFile>) -> Result<Verdict> {
    let n = ctx.dim(super::MAX_DIMENSION);
    let l = ctx.invertible(n);
    let inside = BoxDomain::cube(n, int(1))?;
    *input = operator_file(&l, &inside);
    let det = l.det()?;
    let expected = if det.is_positive() { 1 } else { -1 };
    let got = ls_degree_linear(&l, &inside)?;
    require!(
        got == expected,
        "ls degree {got} on a box containing 0, sign det = {expected}"
    );
    let outside = BoxDomain::new(vec![Interval::new(int(1), int(2))?; n]);
    *input = operator_file(&l, &outside);
    let got = ls_degree_linear(&l, &outside)?;
    require!(got == 0, "ls degree {got} on a box missing 0");
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes_a_few_instances() {
        let campaign = Campaign::new(3, 4, CheckName::ALL.to_vec());
        for check in CheckName::ALL {
            for i in 0..4 {
                let o = run_instance(check, &campaign, i);
                assert!(
                    !matches!(o.verdict, Verdict::Fail(_)),
                    "{check} #{i}: {:?}",
                    o.verdict
                );
                assert!(o.input.is_some(), "{check} #{i}");
            }
        }
    }

    #[test]
    fn corpus_has_homotopy_pairs() {
        assert!(corpus_pairs().len() >= 20);
    }
}

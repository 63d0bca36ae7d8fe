//! Property tests for the multiplicity, parity, orientation, degree and file
//! format invariants. Each oracle is computed by a route independent of the
//! function under test.

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use paritydeg::degree::{
    degree_perturbed, degree_regular, degree_via_chi, find_zeros, ls_degree_linear, AdmissibleTern,
    BoxDomain, PolynomialMap,
};
use paritydeg::format::{MatrixPathSpec, Problem, ProblemFile, TernSpec};
use paritydeg::linalg::{int, ratio, Matrix, Poly, Rational};
use paritydeg::multiplicity::{
    chi_det, chi_smith, chi_transversal, is_k_transversal, malg_classical, rank_one_normalizer,
    rank_one_projection, Chi,
};
use paritydeg::orientation::{ls_orientation, orientation_consistency_check, Orientation};
use paritydeg::parity::{
    parity_endpoint_sign, parity_interval, parity_local, parity_local_at, parity_split_check,
    parity_with_spectrum,
};
use paritydeg::random::stream_rng;
use paritydeg::verify::{generate_jordan_seed, run, Campaign, CheckName};
use paritydeg::{AdmissiblePath, Interval, PolyMatrixPath, Sign};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n).prop_filter("invertible", |m| !m.det().unwrap().is_zero())
}

fn path_of(n: usize, degree: usize) -> impl Strategy<Value = PolyMatrixPath> {
    proptest::collection::vec(matrix(n), degree + 1).prop_map(|c| PolyMatrixPath::new(c).unwrap())
}

fn path() -> impl Strategy<Value = PolyMatrixPath> {
    (1usize..=3, 1usize..=2).prop_flat_map(|(n, d)| path_of(n, d))
}

fn pair() -> impl Strategy<Value = (PolyMatrixPath, PolyMatrixPath)> {
    (1usize..=3, 1usize..=2, 1usize..=2).prop_flat_map(|(n, d, e)| (path_of(n, d), path_of(n, e)))
}

fn interval() -> impl Strategy<Value = Interval> {
    (1i64..=6, 1i64..=6).prop_map(|(a, b)| Interval::new(ratio(-a, 2), ratio(b, 2)).unwrap())
}

fn admissible() -> impl Strategy<Value = AdmissiblePath> {
    (path(), interval()).prop_filter_map("endpoints invertible", |(p, iv)| {
        AdmissiblePath::new(p, iv).ok()
    })
}

/// `diag(λ - λ0, 1, ..., 1) · L` has `χ[·; λ0] >= 1`.
fn singular_at(p: &PolyMatrixPath, lambda0: &Rational) -> PolyMatrixPath {
    let mut d = vec![Poly::one(); p.dimension()];
    d[0] = Poly::linear_root(lambda0);
    PolyMatrixPath::diagonal(&d).compose(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chi_routes_agree(p in path(), l0 in rational(), force in any::<bool>()) {
        let p = if force { singular_at(&p, &l0) } else { p };
        match chi_det(&p, &l0) {
            Chi::Infinite => prop_assert!(chi_smith(&p, &l0).is_err()),
            Chi::Finite(k) => {
                prop_assert_eq!(chi_smith(&p, &l0).unwrap().chi, Chi::Finite(k));
                if is_k_transversal(&p, &l0).is_some() {
                    prop_assert_eq!(chi_transversal(&p, &l0).unwrap(), k);
                }
                // χ = 0 exactly at invertible points.
                prop_assert_eq!(k == 0, !p.det_at(&l0).is_zero());
            }
        }
    }

    #[test]
    fn chi_product_formula((l, m) in pair(), l0 in rational()) {
        let l = singular_at(&l, &l0);
        let lm = l.compose(&m).unwrap();
        let expected = match (chi_det(&l, &l0), chi_det(&m, &l0)) {
            (Chi::Finite(a), Chi::Finite(b)) => Chi::Finite(a + b),
            _ => Chi::Infinite,
        };
        prop_assert_eq!(chi_det(&lm, &l0), expected);
    }

    #[test]
    fn chi_normalization(
        u in proptest::collection::vec(-3i64..=3, 3),
        v in proptest::collection::vec(-3i64..=3, 3),
        l0 in rational(),
    ) {
        let u: Vec<Rational> = u.into_iter().map(int).collect();
        let v: Vec<Rational> = v.into_iter().map(int).collect();
        let Ok(p) = rank_one_projection(&u, &v) else { return Ok(()) };
        prop_assert_eq!(&(&p * &p), &p);
        let e = rank_one_normalizer(&p, &l0).unwrap();
        prop_assert_eq!(chi_det(&e, &l0), Chi::Finite(1));
        prop_assert_eq!(chi_smith(&e, &l0).unwrap().chi, Chi::Finite(1));
        prop_assert_eq!(parity_local(&e, &l0).unwrap().value, Sign::Minus);
    }

    #[test]
    fn classical_equivalence(seed in any::<u64>(), n in 1usize..=5) {
        let j = generate_jordan_seed(&mut stream_rng(seed, 0, 0), n);
        let path = PolyMatrixPath::shifted_operator(&j.matrix).unwrap();
        for (mu, m) in j.multiplicities() {
            prop_assert_eq!(chi_det(&path, &mu), Chi::Finite(m));
            prop_assert_eq!(malg_classical(&j.matrix, &mu).unwrap().malg, m);
        }
    }

    #[test]
    fn parity_oracle(p in admissible()) {
        let sigma = parity_interval(&p);
        prop_assert_eq!(sigma, parity_endpoint_sign(&p));
        let (by_spectrum, spectrum) = parity_with_spectrum(&p).unwrap();
        prop_assert_eq!(by_spectrum, sigma);
        for ev in &spectrum.eigenvalues {
            let local = parity_local_at(p.path(), ev).unwrap();
            let lo = Sign::of(&p.path().det_at(local.window.a())).unwrap();
            let hi = Sign::of(&p.path().det_at(local.window.b())).unwrap();
            prop_assert_eq!(local.value == Sign::Minus, lo != hi);
        }
    }

    #[test]
    fn local_parity_product((l, m) in pair(), l0 in rational()) {
        let lm = l.compose(&m).unwrap();
        if let (Ok(a), Ok(b)) = (parity_local(&l, &l0), parity_local(&m, &l0)) {
            prop_assert_eq!(parity_local(&lm, &l0).unwrap().value, a.value * b.value);
        }
    }

    #[test]
    fn parity_split(p in admissible(), k in 1i64..16) {
        let iv = p.interval();
        let c = iv.a() + iv.width() * ratio(k, 16);
        prop_assume!(!p.path().det_at(&c).is_zero());
        prop_assert!(parity_split_check(&p, &c).unwrap().holds());
    }

    #[test]
    fn orientation_identities(p in admissible(), base in invertible(3), x in invertible(3), y in invertible(3)) {
        let n = p.path().dimension();
        let base = base.submatrix(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
        prop_assume!(!base.det().unwrap().is_zero());
        let plus = Orientation::new(base, Sign::Plus).unwrap();
        let minus = plus.opposite();
        prop_assert!(orientation_consistency_check(&plus, &p).unwrap().passed);
        prop_assert!(orientation_consistency_check(&minus, &p).unwrap().passed);
        let plus3 = Orientation::new(Matrix::identity(3), Sign::Plus).unwrap();
        prop_assert_eq!(plus3.evaluate(&x).unwrap() * plus3.opposite().evaluate(&x).unwrap(), Sign::Minus);
        let same_class = x.det().unwrap().is_positive() == y.det().unwrap().is_positive();
        prop_assert_eq!(plus3.evaluate(&x).unwrap() == plus3.evaluate(&y).unwrap(), same_class);
    }

    #[test]
    fn linear_degree_routes(l in invertible(2), reference in invertible(2), base in invertible(2), flip in any::<bool>()) {
        let sign = if flip { Sign::Minus } else { Sign::Plus };
        let eps = Orientation::new(base, sign).unwrap();
        let omega = BoxDomain::cube(2, int(1)).unwrap();
        let t = AdmissibleTern::new(PolynomialMap::linear(&l).unwrap(), omega.clone(), eps.clone()).unwrap();
        let regular = degree_regular(&t).unwrap();
        prop_assert_eq!(regular, eps.evaluate(&l).unwrap().to_i64());
        prop_assert_eq!(degree_via_chi(&t, Some(&reference)).unwrap(), regular);
        let det_sign = if l.det().unwrap().is_positive() { 1 } else { -1 };
        prop_assert_eq!(ls_degree_linear(&l, &omega).unwrap(), det_sign);
    }

    #[test]
    fn ls_degree_matches_determinant_sign(l in invertible(3)) {
        let det_sign = if l.det().unwrap().is_positive() { 1 } else { -1 };
        prop_assert_eq!(ls_degree_linear(&l, &BoxDomain::cube(3, int(1)).unwrap()).unwrap(), det_sign);
        let away = BoxDomain::new(vec![Interval::new(int(1), int(2)).unwrap(); 3]);
        prop_assert_eq!(ls_degree_linear(&l, &away).unwrap(), 0);
    }

    #[test]
    fn matrix_path_files_round_trip(p in path(), iv in interval()) {
        let file = ProblemFile::new(Problem::MatrixPath(MatrixPathSpec::from_path(&p, Some(&iv))));
        let back = ProblemFile::parse(&file.to_json()).unwrap();
        let Problem::MatrixPath(spec) = &back.problem else { panic!("kind changed") };
        prop_assert_eq!(spec.path().unwrap(), p);
        prop_assert_eq!(spec.interval().unwrap(), Some(iv));
        prop_assert_eq!(back, file);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Quadratic maps `(x² - a, y - b)`: zeros exist whenever the degree is
    /// nonzero, and the perturbed degree agrees with the regular one.
    #[test]
    fn degree_existence_and_perturbation(a in -3i64..=3, b in -3i64..=3, q in 1i64..=4) {
        let f = PolynomialMap::parse(&["x^2", "y"]).unwrap().shifted(&[ratio(a, q), ratio(b, 2 * q)]);
        let omega = BoxDomain::cube(2, int(2)).unwrap();
        let Ok(t) = AdmissibleTern::new(f, omega, ls_orientation(2)) else { return Ok(()) };
        let Ok(d) = degree_regular(&t) else { return Ok(()) };
        if d != 0 {
            prop_assert!(!find_zeros(t.map(), t.domain()).unwrap().is_empty());
        }
        let r = degree_perturbed(t.map(), t.domain(), t.orientation(), a.unsigned_abs()).unwrap();
        prop_assert_eq!(r.degree, d);
        prop_assert_eq!(r.samples[0].degree, r.samples[1].degree);
        let file = ProblemFile::new(Problem::Tern(TernSpec::from_tern(&t)));
        let Problem::Tern(spec) = ProblemFile::parse(&file.to_json()).unwrap().problem else { panic!() };
        prop_assert_eq!(spec.tern().unwrap(), t);
    }

    #[test]
    fn campaigns_are_deterministic(seed in any::<u64>()) {
        let c = Campaign::new(seed, 3, vec![CheckName::ChiAgreement, CheckName::ParityOracle, CheckName::LsFormula]);
        let a = run(&c).unwrap();
        prop_assert!(a.all_passed(), "{}", a.to_text());
        prop_assert_eq!(a.to_json(), run(&c).unwrap().to_json());
    }
}

//! A fixed corpus of admissible terns with hand-computed degrees.

use super::domain::BoxDomain;
use super::polymap::PolynomialMap;
use super::tern::AdmissibleTern;
use crate::linalg::{int, ratio, Matrix, Rational};
use crate::orientation::{ls_orientation, Orientation};
use crate::paths::Interval;
use crate::sign::Sign;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub tern: AdmissibleTern,
    pub expected: i64,
}

fn cube(n: usize, r: Rational) -> BoxDomain {
    BoxDomain::cube(n, r).expect("positive radius")
}

fn sides(bounds: &[(Rational, Rational)]) -> BoxDomain {
    BoxDomain::new(
        bounds
            .iter()
            .map(|(a, b)| Interval::new(a.clone(), b.clone()).expect("ordered bounds"))
            .collect(),
    )
}

fn entry(
    name: &'static str,
    components: &[&str],
    omega: BoxDomain,
    eps: Orientation,
    expected: i64,
) -> CorpusEntry {
    let f = PolynomialMap::parse(components).expect("corpus map parses");
    let tern = AdmissibleTern::new(f, omega, eps).expect("corpus tern is admissible");
    CorpusEntry {
        name,
        tern,
        expected,
    }
}

fn ls(name: &'static str, components: &[&str], omega: BoxDomain, expected: i64) -> CorpusEntry {
    let n = components.len();
    entry(name, components, omega, ls_orientation(n), expected)
}

/// Terns whose zeros are all regular.
pub fn regular_corpus() -> Vec<CorpusEntry> {
    let unit = |n| cube(n, int(1));
    let two = |n| cube(n, int(2));
    vec![
        ls("identity-1d", &["x"], unit(1), 1),
        ls("negation-1d", &["-x"], unit(1), -1),
        ls("quadratic-two-roots", &["x^2 - 1"], two(1), 0),
        ls("quadratic-no-roots", &["x^2 + 1"], two(1), 0),
        ls("cubic-three-roots", &["x^3 - x"], two(1), 1),
        ls("quadratic-irrational", &["x^2 - 2"], two(1), 0),
        ls(
            "affine-half-interval",
            &["2*x - 1"],
            sides(&[(int(0), int(1))]),
            1,
        ),
        ls(
            "cubic-irrational",
            &["x^3 - 2"],
            sides(&[(int(0), int(2))]),
            1,
        ),
        ls(
            "quartic-three-roots",
            &["4*x^4 - 5*x^2 + 1"],
            sides(&[(ratio(-3, 4), ratio(3, 2))]),
            1,
        ),
        ls("identity-2d", &["x", "y"], unit(2), 1),
        ls("reflection-2d", &["-x", "y"], unit(2), -1),
        ls("parabola-axis-2d", &["x^2 - 1", "y"], two(2), 0),
        ls("rotation-2d", &["-y", "x"], unit(2), 1),
        ls("circle-diagonal", &["x^2 + y^2 - 1", "x - y"], two(2), 0),
        ls(
            "hyperbola-diagonal-quadrant",
            &["x*y - 1/4", "x - y"],
            sides(&[(int(0), int(1)), (int(0), int(1))]),
            -1,
        ),
        ls("complex-square", &["x^2 - y^2 - 1/4", "2*x*y"], unit(2), 2),
        ls(
            "complex-cube",
            &["x^3 - 3*x*y^2 - 1/8", "3*x^2*y - y^3"],
            unit(2),
            3,
        ),
        ls(
            "conjugate-square",
            &["x^2 - y^2 - 1/4", "-2*x*y"],
            unit(2),
            -2,
        ),
        ls("parabola-line", &["y - x^2", "y - 1/4"], unit(2), 0),
        ls(
            "linear-generic-2d",
            &["2*x + y - 1/3", "x - 3*y + 1/2"],
            unit(2),
            -1,
        ),
        ls("identity-3d", &["x", "y", "z"], unit(3), 1),
        ls("parabola-axis-3d", &["x^2 - 1", "y", "z"], two(3), 0),
        ls(
            "triangular-3d",
            &["x - y", "y - z^2", "z - 1/2"],
            unit(3),
            1,
        ),
        entry(
            "identity-opposite-orientation",
            &["x"],
            unit(1),
            ls_orientation(1).opposite(),
            -1,
        ),
        entry(
            "identity-reflected-base",
            &["x", "y"],
            unit(2),
            Orientation::new(Matrix::from_ints(&[&[-1, 0], &[0, 1]]), Sign::Plus)
                .expect("invertible base"),
            -1,
        ),
    ]
}

/// Terns for the regular-value perturbation, including critical zeros.
pub fn perturbation_corpus() -> Vec<CorpusEntry> {
    let unit = |n| cube(n, int(1));
    let mut out = vec![
        ls("critical-square", &["x^2"], unit(1), 0),
        ls("critical-cube", &["x^3"], unit(1), 1),
        ls("critical-fold-2d", &["x^2", "y"], unit(2), 0),
        ls(
            "critical-complex-square",
            &["x^2 - y^2", "2*x*y"],
            unit(2),
            2,
        ),
    ];
    out.extend(regular_corpus());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::{degree_perturbed, degree_regular, degree_via_chi};

    #[test]
    fn corpus_degrees_match_hand_values() {
        let corpus = regular_corpus();
        assert!(corpus.len() >= 20);
        for e in &corpus {
            assert_eq!(degree_regular(&e.tern), Ok(e.expected), "{}", e.name);
            assert_eq!(degree_via_chi(&e.tern, None), Ok(e.expected), "{}", e.name);
        }
    }

    #[test]
    fn perturbed_degrees_match_hand_values() {
        for (i, e) in perturbation_corpus().iter().enumerate() {
            let t = &e.tern;
            let r = degree_perturbed(t.map(), t.domain(), t.orientation(), i as u64).unwrap();
            assert_eq!(r.degree, e.expected, "{}", e.name);
        }
    }
}

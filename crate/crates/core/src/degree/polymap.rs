//! Multivariate polynomials over the rationals and polynomial maps `ℝᴺ → ℝᴺ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::interval::RatInterval;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, int, parse_rational, Matrix, Rational};

/// A polynomial in `nvars` variables, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.add_term(e, int(1));
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Natural interval extension with exact power enclosures.
    pub fn eval_interval(&self, x: &[RatInterval]) -> RatInterval {
        let mut acc = RatInterval::point(Rational::zero());
        for (e, c) in &self.terms {
            let mut t = RatInterval::point(c.clone());
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t = &t * &xi.powi(k);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = e.clone();
                d[i] -= 1;
                p.add_term(d, c * int(e[i] as i64));
            }
        }
        p
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn scale(&self, s: &Rational) -> MultiPoly {
        let mut p = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c * s);
        }
        p
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut p = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    /// Parses sums of terms like `3/2*x^2*y - y + 1/4`.
    ///
    /// Variables are `x1 … xN`; for `N ≤ 3` the names `x, y, z` are accepted too.
    pub fn parse(nvars: usize, s: &str) -> Result<MultiPoly> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad("empty expression"));
        }
        let mut p = MultiPoly::zero(nvars);
        let mut chunks = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        for i in 1..bytes.len() {
            let c = bytes[i];
            // A sign splits terms unless it follows `^`, `/` or `*`.
            if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'^' | b'/' | b'*') {
                chunks.push(&cleaned[start..i]);
                start = i;
            }
        }
        chunks.push(&cleaned[start..]);
        for chunk in chunks {
            let (negative, body) = match chunk.as_bytes()[0] {
                b'-' => (true, &chunk[1..]),
                b'+' => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = int(1);
            let mut e = vec![0u32; nvars];
            for f in body.split('*') {
                if f.is_empty() {
                    return Err(bad("empty factor"));
                }
                if f.as_bytes()[0].is_ascii_digit() {
                    coeff *= parse_rational(f).map_err(|_| bad("bad coefficient"))?;
                } else {
                    let (name, power) = match f.split_once('^') {
                        Some((n, p)) => (n, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (f, 1),
                    };
                    let idx = variable_index(nvars, name).ok_or_else(|| bad("unknown variable"))?;
                    e[idx] += power;
                }
            }
            if negative {
                coeff = -coeff;
            }
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}

fn variable_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn variable_index(nvars: usize, name: &str) -> Option<usize> {
    if nvars <= 3 {
        if let Some(i) = ["x", "y", "z"].iter().position(|&v| v == name) {
            return (i < nvars).then_some(i);
        }
    }
    let i: usize = name.strip_prefix('x')?.parse().ok()?;
    (1..=nvars).contains(&i).then(|| i - 1)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first, then lexicographically.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || e.iter().all(|&p| p == 0) {
                parts.push(format_rational(&mag));
            }
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => parts.push(variable_name(self.nvars, i)),
                    _ => parts.push(format!("{}^{}", variable_name(self.nvars, i), p)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial map `f: ℝᴺ → ℝᴺ` with its formal Jacobian.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolynomialMap {
    components: Vec<MultiPoly>,
    jacobian: Vec<Vec<MultiPoly>>,
}

impl PolynomialMap {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let n = components.len();
        for c in &components {
            if c.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.nvars(),
                });
            }
        }
        let jacobian = components
            .iter()
            .map(|c| (0..n).map(|j| c.partial(j)).collect())
            .collect();
        Ok(PolynomialMap {
            components,
            jacobian,
        })
    }

    pub fn parse(components: &[&str]) -> Result<Self> {
        let n = components.len();
        let polys = components
            .iter()
            .map(|s| MultiPoly::parse(n, s))
            .collect::<Result<Vec<_>>>()?;
        PolynomialMap::new(polys)
    }

    /// The linear map `x ↦ L x`.
    pub fn linear(l: &Matrix) -> Result<Self> {
        let n = l.require_square()?;
        let comps = (0..n)
            .map(|i| {
                (0..n).fold(MultiPoly::zero(n), |acc, j| {
                    acc.add(&MultiPoly::var(n, j).scale(&l[(i, j)]))
                })
            })
            .collect();
        PolynomialMap::new(comps)
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn eval(&self, x: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    pub fn eval_interval(&self, x: &[RatInterval]) -> Vec<RatInterval> {
        self.components.iter().map(|c| c.eval_interval(x)).collect()
    }

    pub fn jacobian_at(&self, x: &[Rational]) -> Matrix {
        let n = self.dimension();
        Matrix::from_fn(n, n, |i, j| self.jacobian[i][j].eval(x))
    }

    pub fn jacobian_interval(&self, x: &[RatInterval]) -> Vec<Vec<RatInterval>> {
        self.jacobian
            .iter()
            .map(|row| row.iter().map(|p| p.eval_interval(x)).collect())
            .collect()
    }

    /// `f - x0`.
    pub fn shifted(&self, x0: &[Rational]) -> PolynomialMap {
        let n = self.dimension();
        let comps = self
            .components
            .iter()
            .zip(x0)
            .map(|(c, v)| c.add(&MultiPoly::constant(n, -v.clone())))
            .collect();
        PolynomialMap::new(comps).expect("same dimension")
    }

    /// `(1 - t) f + t g` at a fixed `t`.
    pub fn blend(&self, other: &PolynomialMap, t: &Rational) -> Result<PolynomialMap> {
        if other.dimension() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                found: other.dimension(),
            });
        }
        let s = Rational::one() - t;
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.scale(&s).add(&b.scale(t)))
            .collect();
        PolynomialMap::new(comps)
    }

    /// The matrix `L` when `f(x) = L x` exactly.
    pub fn as_linear(&self) -> Option<Matrix> {
        let n = self.dimension();
        for c in &self.components {
            if c.terms().any(|(e, _)| e.iter().sum::<u32>() != 1) {
                return None;
            }
        }
        Some(self.jacobian_at(&vec![Rational::zero(); n]))
    }
}

impl fmt::Display for PolynomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for PolynomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

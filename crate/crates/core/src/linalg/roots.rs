//! Certified real root isolation: square-free decomposition, Sturm sequences
//! and bisection. Rational roots are always detected and returned exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{common_denominator, dyadic_unit, integers_between, Rational};
use crate::error::{Error, Result};
use crate::paths::Interval;

/// Default width below which irrational roots are reported: `2^-40`.
pub const DEFAULT_ISOLATION_BITS: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    /// Open interval `(lo, hi)` holding exactly one root; neither end is a root.
    Isolated {
        lo: Rational,
        hi: Rational,
    },
}

impl RootLocation {
    pub fn lower(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { hi, .. } => hi,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Isolated { .. } => None,
        }
    }

    /// Midpoint as a float, for display.
    pub fn approx(&self) -> f64 {
        let mid = (self.lower() + self.upper()) / Rational::from_integer(2.into());
        super::rational::to_f64(&mid)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub location: RootLocation,
    pub multiplicity: usize,
    /// The square-free factor this root belongs to (monic).
    pub factor: Poly,
}

/// Sturm chain of `p`: `p, p', -rem(p, p'), ...`.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

/// Sign variations of the chain at `x`, zeros dropped.
pub fn sign_variations(chain: &[Poly], x: &Rational) -> usize {
    let mut last: Option<bool> = None;
    let mut v = 0;
    for p in chain {
        let s = p.eval(x);
        if s.is_zero() {
            continue;
        }
        let pos = s.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                v += 1;
            }
        }
        last = Some(pos);
    }
    v
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn count_distinct_open(p: &Poly, a: &Rational, b: &Rational) -> usize {
    assert!(!p.is_zero());
    if a >= b {
        return 0;
    }
    let mut q = p.squarefree_part();
    for end in [a, b] {
        if q.eval(end).is_zero() {
            q = q.exact_div(&Poly::linear_root(end));
        }
    }
    if q.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(&q);
    sign_variations(&chain, a) - sign_variations(&chain, b)
}

/// Number of distinct real roots in the closed interval `[a, b]`.
pub fn count_distinct_closed(p: &Poly, a: &Rational, b: &Rational) -> usize {
    let ends = if a == b {
        usize::from(p.eval(a).is_zero())
    } else {
        usize::from(p.eval(a).is_zero()) + usize::from(p.eval(b).is_zero())
    };
    ends + count_distinct_open(p, a, b)
}

/// Roots of `p` in the open interval `(a, b)` counted with multiplicity.
pub fn count_with_multiplicity_open(p: &Poly, a: &Rational, b: &Rational) -> usize {
    p.squarefree_decomposition()
        .iter()
        .map(|(q, m)| m * count_distinct_open(q, a, b))
        .sum()
}

/// All real roots of `p` in the closed interval, with exact multiplicities,
/// sorted; irrational roots isolated below width `2^-40`.
pub fn real_roots_in(p: &Poly, interval: &Interval) -> Result<Vec<RealRoot>> {
    real_roots_in_with_width(p, interval, &dyadic_unit(DEFAULT_ISOLATION_BITS))
}

pub fn real_roots_in_with_width(
    p: &Poly,
    interval: &Interval,
    width: &Rational,
) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (a, b) = (interval.a(), interval.b());
    let mut roots = Vec::new();
    for (q, mult) in p.squarefree_decomposition() {
        let mut q_open = q.clone();
        for end in [a, b] {
            if q.eval(end).is_zero() {
                roots.push(RealRoot {
                    location: RootLocation::Exact(end.clone()),
                    multiplicity: mult,
                    factor: q.clone(),
                });
                q_open = q_open.exact_div(&Poly::linear_root(end));
            }
        }
        for location in isolate_squarefree(&q_open, a, b, width) {
            roots.push(RealRoot {
                location,
                multiplicity: mult,
                factor: q.clone(),
            });
        }
    }
    separate_and_sort(&mut roots);
    Ok(roots)
}

/// Isolates the roots of square-free `q` in the open interval `(a, b)`, where
/// neither end is a root.
fn isolate_squarefree(q: &Poly, a: &Rational, b: &Rational, width: &Rational) -> Vec<RootLocation> {
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(q);
    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    let mut stack = vec![(
        a.clone(),
        b.clone(),
        sign_variations(&chain, a),
        sign_variations(&chain, b),
    )];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo - vhi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(refine_single(q, lo, hi, width));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if q.eval(&mid).is_zero() {
            // Split off the exact root and isolate the rest of the factor.
            out.push(RootLocation::Exact(mid.clone()));
            let rest = q.exact_div(&Poly::linear_root(&mid));
            out.extend(isolate_squarefree(&rest, &lo, &hi, width));
            continue;
        }
        let vmid = sign_variations(&chain, &mid);
        stack.push((lo, mid.clone(), vlo, vmid));
        stack.push((mid, hi, vmid, vhi));
    }
    out
}

/// Leading coefficient of the primitive integer polynomial proportional to `q`.
fn integer_leading(q: &Poly) -> BigInt {
    let l = Rational::from_integer(common_denominator(q.coeffs()));
    let ints: Vec<BigInt> = q.coeffs().iter().map(|c| (c * &l).to_integer()).collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    (ints.last().expect("nonzero polynomial") / content).abs()
}

/// Shrinks the isolating interval of a simple root of `q` (sign change across
/// `(lo, hi)`) until it is narrower than `width` and narrow enough that at
/// most one rational with admissible denominator fits; returns the exact root
/// when it is rational.
fn refine_single(q: &Poly, mut lo: Rational, mut hi: Rational, width: &Rational) -> RootLocation {
    let lead = Rational::from_integer(integer_leading(q));
    let two = Rational::from_integer(2.into());
    let lo_pos = q.eval(&lo).is_positive();
    loop {
        let w = &hi - &lo;
        if &w < width && &w * &lead < Rational::one() {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let v = q.eval(&mid);
        if v.is_zero() {
            return RootLocation::Exact(mid);
        }
        if v.is_positive() == lo_pos {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // A rational root n/d of q has d | lead, so lead * root is an integer.
    for k in integers_between(&(&lo * &lead), &(&hi * &lead)) {
        let r = Rational::new(k, lead.to_integer());
        if r > lo && r < hi && q.eval(&r).is_zero() {
            return RootLocation::Exact(r);
        }
    }
    RootLocation::Isolated { lo, hi }
}

/// Bisects an isolating interval once, keeping the root.
fn bisect_root(root: &mut RealRoot) {
    let RootLocation::Isolated { lo, hi } = &root.location else {
        return;
    };
    let mid = (lo + hi) / Rational::from_integer(2.into());
    let v = root.factor.eval(&mid);
    if v.is_zero() {
        root.location = RootLocation::Exact(mid);
        return;
    }
    let lo_pos = root.factor.eval(lo).is_positive();
    root.location = if v.is_positive() == lo_pos {
        RootLocation::Isolated {
            lo: mid,
            hi: hi.clone(),
        }
    } else {
        RootLocation::Isolated {
            lo: lo.clone(),
            hi: mid,
        }
    };
}

/// Sorts roots and refines isolating intervals of distinct factors until no
/// two locations overlap.
fn separate_and_sort(roots: &mut [RealRoot]) {
    loop {
        roots.sort_by(|x, y| {
            x.location
                .lower()
                .cmp(y.location.lower())
                .then_with(|| x.location.upper().cmp(y.location.upper()))
        });
        let mut clash = None;
        for i in 1..roots.len() {
            let prev_hi = roots[i - 1].location.upper();
            let cur_lo = roots[i].location.lower();
            let overlap = match (&roots[i - 1].location, &roots[i].location) {
                (RootLocation::Exact(x), RootLocation::Exact(y)) => x == y,
                (RootLocation::Exact(_), _) | (_, RootLocation::Exact(_)) => {
                    prev_hi.cmp(cur_lo) != Ordering::Less
                }
                _ => prev_hi > cur_lo,
            };
            if overlap {
                clash = Some(i);
                break;
            }
        }
        let Some(i) = clash else { break };
        let w = |r: &RealRoot| r.location.upper() - r.location.lower();
        let target = if w(&roots[i - 1]) >= w(&roots[i]) {
            i - 1
        } else {
            i
        };
        bisect_root(&mut roots[target]);
    }
}

//! Sturm sequences and real root isolation with exact rational endpoints.

use num_traits::Zero;

use super::poly::Poly;
use super::rational::{rat, ratio, Rational};
use super::scalar::OrderedScalar;
use crate::error::{Error, Result};

/// Sturm chain of the squarefree part of a nonzero polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain<F> {
    seq: Vec<Poly<F>>,
}

fn sign_at<F: OrderedScalar>(p: &Poly<F>, x: &Rational) -> i8 {
    p.eval(&F::from_rational(x.clone())).signum_exact()
}

/// Sign of `p(x)` as `x → +∞` (`positive`) or `x → −∞`.
fn sign_at_infinity<F: OrderedScalar>(p: &Poly<F>, positive: bool) -> i8 {
    let s = p.leading().signum_exact();
    if positive || p.deg().is_multiple_of(2) {
        s
    } else {
        -s
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Scales by a positive constant so the leading coefficient is ±1.
fn normalize<F: OrderedScalar>(p: Poly<F>) -> Poly<F> {
    let lc = p.leading();
    if lc.is_zero() {
        return p;
    }
    let s = lc.signum_exact();
    let mut inv = lc.recip();
    if s < 0 {
        inv = -inv;
    }
    p.scale(&inv)
}

impl<F: OrderedScalar> SturmChain<F> {
    pub fn new(p: &Poly<F>) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let base = if p.is_constant() {
            p.clone()
        } else {
            normalize(p.exact_div(&Poly::gcd(p, &p.derivative())))
        };
        let mut seq = vec![base.clone()];
        let mut next = normalize(base.derivative());
        while !next.is_zero() {
            let r = -&seq.last().unwrap().rem(&next);
            seq.push(next);
            next = normalize(r);
        }
        SturmChain { seq }
    }

    /// The squarefree polynomial the chain was built from.
    pub fn base(&self) -> &Poly<F> {
        &self.seq[0]
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.seq.iter().map(|p| sign_at(p, x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.seq.iter().map(|p| sign_at_infinity(p, positive)))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if sign_at(self.base(), b) == 0 {
            n - 1
        } else {
            n
        }
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        sign_at(self.base(), x) == 0
    }

    /// Picks a non-root strictly inside `(a, b)`, preferring the midpoint.
    pub fn split_point(&self, a: &Rational, b: &Rational) -> Rational {
        let w = b - a;
        for den in 2i64.. {
            for num in 1..den {
                if num_integer::Integer::gcd(&num, &den) != 1 {
                    continue;
                }
                let m = a + &w * &ratio(num, den);
                if !self.is_root(&m) {
                    return m;
                }
            }
        }
        unreachable!()
    }

    /// Open intervals with non-root rational endpoints, one per distinct real root,
    /// ordered left to right.
    pub fn isolate(&self) -> Vec<(Rational, Rational)> {
        let mut out = Vec::new();
        if self.base().is_constant() || self.count_all() == 0 {
            return out;
        }
        let b = root_bound(self.base());
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            match self.count_open(&lo, &hi) {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let m = self.split_point(&lo, &hi);
                    stack.push((m.clone(), hi));
                    stack.push((lo, m));
                }
            }
        }
        out
    }

    /// Shrinks an isolating interval of a single root until its width is at most `width`.
    pub fn refine(&self, mut lo: Rational, mut hi: Rational, width: &Rational) -> (Rational, Rational) {
        debug_assert_eq!(self.count_open(&lo, &hi), 1);
        while &(&hi - &lo) > width {
            let m = self.split_point(&lo, &hi);
            if self.count_open(&lo, &m) == 1 {
                hi = m;
            } else {
                lo = m;
            }
        }
        (lo, hi)
    }
}

/// Cauchy bound: every real root lies strictly inside `(−B, B)`.
pub fn root_bound<F: OrderedScalar>(p: &Poly<F>) -> Rational {
    let m = p.monic();
    let n = m.deg();
    let max = m.coeffs()[..n]
        .iter()
        .map(|c| c.abs_bound())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    max + rat(1)
}

/// An isolating interval `(lo, hi)` of one real root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

/// Isolates all real roots of a nonzero polynomial. Intervals are open, pairwise
/// disjoint, ordered, and their endpoints are not roots.
pub fn sturm_real_roots<F: OrderedScalar>(p: &Poly<F>) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let parts = p.squarefree_decomposition();
    let chain = SturmChain::new(p);
    let intervals = chain.isolate();
    Ok(intervals
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = parts
                .iter()
                .find(|(s, _)| sign_at(s, &lo) * sign_at(s, &hi) < 0)
                .map(|(_, k)| *k)
                .expect("root interval without a squarefree factor");
            RootInterval { lo, hi, multiplicity }
        })
        .collect())
}

/// Cauchy index `Ind_{−∞}^{+∞} p/q`: jumps of `p/q` from `−∞` to `+∞` minus jumps from
/// `+∞` to `−∞`, from the sign variations of the Sturm sequence of `(q, p mod q)`.
pub fn cauchy_index<F: OrderedScalar>(p: &Poly<F>, q: &Poly<F>) -> i64 {
    assert!(!q.is_zero(), "Cauchy index with a zero denominator");
    let mut seq = vec![q.clone()];
    let mut next = p.rem(q);
    while !next.is_zero() {
        let r = -&seq.last().unwrap().rem(&next);
        seq.push(next);
        next = r;
    }
    let at = |positive: bool| variations(seq.iter().map(|f| sign_at_infinity(f, positive))) as i64;
    at(false) - at(true)
}

/// Midpoint helper used by callers that want a representative rational.
pub fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / rat(2)
}

/// Sign of a polynomial at a point, exposed for interval bookkeeping.
pub fn poly_sign_at<F: OrderedScalar>(p: &Poly<F>, x: &Rational) -> i8 {
    sign_at(p, x)
}

pub fn poly_sign_at_infinity<F: OrderedScalar>(p: &Poly<F>, positive: bool) -> i8 {
    sign_at_infinity(p, positive)
}

/// Sign variations of a sequence of signs, zeros dropped.
pub fn sign_variations(signs: impl Iterator<Item = i8>) -> usize {
    variations(signs)
}

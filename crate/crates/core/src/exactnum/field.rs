//! A real algebraic number field ℚ(α) and its elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::factor::factor_over_q;
use super::poly::Poly;
use super::rational::{format_rational, rat, rational_to_f64, Rational};
use super::scalar::{OrderedScalar, Scalar};
use super::sturm::{poly_sign_at, SturmChain};
use crate::error::{Error, Result};

/// ℚ(α) for a real root α of a monic irreducible polynomial, pinned by an
/// isolating interval.
#[derive(Debug)]
pub struct RealAlgebraicField {
    min_poly: Poly<Rational>,
    interval: (Rational, Rational),
    chain: SturmChain<Rational>,
    /// Coordinates of `α^d`.
    alpha_d: Vec<Rational>,
    approx: f64,
}

impl PartialEq for RealAlgebraicField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.contains_same_root(other)
    }
}

impl RealAlgebraicField {
    /// Validates the polynomial (made monic) and the interval.
    pub fn new(min_poly: Poly<Rational>, lo: Rational, hi: Rational) -> Result<Arc<Self>> {
        if min_poly.is_constant() {
            return Err(Error::InvalidField("minimal polynomial must have degree at least 1".into()));
        }
        if lo >= hi {
            return Err(Error::InvalidField("interval must satisfy lo < hi".into()));
        }
        let min_poly = min_poly.monic();
        let factors = factor_over_q(&min_poly)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            let parts: Vec<String> = factors.iter().map(|(f, k)| format!("({f})^{k}")).collect();
            return Err(Error::InvalidField(format!(
                "minimal polynomial {min_poly} is reducible over Q: {}",
                parts.join(" ")
            )));
        }
        let chain = SturmChain::new(&min_poly);
        if chain.is_root(&lo) || chain.is_root(&hi) {
            return Err(Error::InvalidField("interval endpoint is a root of the minimal polynomial".into()));
        }
        let count = chain.count_open(&lo, &hi);
        if count != 1 {
            return Err(Error::InvalidField(format!(
                "interval ({}, {}) contains {count} roots of {min_poly}, expected exactly one",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        let d = min_poly.deg();
        let alpha_d: Vec<Rational> = min_poly.coeffs()[..d].iter().map(|c| -c.clone()).collect();
        let width = Rational::new(1.into(), num_bigint::BigInt::from(1u64) << 80);
        let (a, b) = chain.refine(lo.clone(), hi.clone(), &(&width * &(lo.abs() + hi.abs() + rat(1))));
        let approx = rational_to_f64(&((a + b) / rat(2)));
        Ok(Arc::new(RealAlgebraicField {
            min_poly,
            interval: (lo, hi),
            chain,
            alpha_d,
            approx,
        }))
    }

    /// ℚ(√n) for a positive non-square integer `n`.
    pub fn sqrt(n: i64) -> Result<Arc<Self>> {
        let hi = rat(n.max(1) + 1);
        Self::new(Poly::new(vec![rat(-n), rat(0), rat(1)]), rat(0), hi)
    }

    pub fn degree(&self) -> usize {
        self.min_poly.deg()
    }

    pub fn min_poly(&self) -> &Poly<Rational> {
        &self.min_poly
    }

    pub fn interval(&self) -> &(Rational, Rational) {
        &self.interval
    }

    pub fn approx(&self) -> f64 {
        self.approx
    }

    fn contains_same_root(&self, other: &Self) -> bool {
        let lo = (&self.interval.0).max(&other.interval.0);
        let hi = (&self.interval.1).min(&other.interval.1);
        lo < hi && self.chain.count_open(lo, hi) == 1
    }

    /// The generator α.
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        if self.degree() == 1 {
            coords[0] = -self.min_poly.coeff(0);
        } else {
            coords[1] = Rational::one();
        }
        FieldElement {
            coords,
            field: Some(self.clone()),
        }
    }

    /// Reduces a coordinate vector of any length modulo the minimal polynomial.
    fn reduce(&self, mut c: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        if d == 1 {
            let a = -self.min_poly.coeff(0);
            let v = Poly::new(c).eval(&a);
            return vec![v];
        }
        for k in (d..c.len()).rev() {
            let top = std::mem::take(&mut c[k]);
            if top.is_zero() {
                continue;
            }
            for j in 0..d {
                let t = &top * &self.alpha_d[j];
                c[k - d + j] = &c[k - d + j] + &t;
            }
        }
        c.truncate(d);
        c.resize(d, Rational::zero());
        c
    }
}

/// `Σ coords[k] α^k`, or a plain rational when no field is attached.
#[derive(Clone)]
pub struct FieldElement {
    coords: Vec<Rational>,
    field: Option<Arc<RealAlgebraicField>>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            None => write!(f, "{}", format_rational(&self.coords[0])),
            Some(_) => {
                let s = Poly::new(self.coords.clone()).to_string().replace('x', "a");
                write!(f, "{s}")
            }
        }
    }
}

impl FieldElement {
    pub fn rational(r: Rational) -> Self {
        FieldElement {
            coords: vec![r],
            field: None,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    /// Builds `Σ coords[k] α^k`, reducing modulo the minimal polynomial if needed.
    pub fn from_coords(coords: Vec<Rational>, field: Option<Arc<RealAlgebraicField>>) -> Self {
        match field {
            None => {
                assert!(coords.len() <= 1 || coords[1..].iter().all(|c| c.is_zero()));
                Self::rational(coords.into_iter().next().unwrap_or_else(Rational::zero))
            }
            Some(f) => FieldElement {
                coords: f.reduce(coords),
                field: Some(f),
            },
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn field(&self) -> Option<&Arc<RealAlgebraicField>> {
        self.field.as_ref()
    }

    /// Coordinates padded to `d` entries.
    pub fn coords_padded(&self, d: usize) -> Vec<Rational> {
        let mut c = self.coords.clone();
        c.resize(d.max(c.len()), Rational::zero());
        c
    }

    /// Attaches a field to a plain rational; field elements are returned unchanged.
    pub fn promote(&self, field: &Arc<RealAlgebraicField>) -> Self {
        match &self.field {
            Some(_) => self.clone(),
            None => FieldElement {
                coords: self.coords_padded(field.degree()),
                field: Some(field.clone()),
            },
        }
    }

    /// The rational value if every coordinate of index ≥ 1 vanishes.
    pub fn rational_part(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.rational_part().is_some()
    }

    /// Exact sign of the real number represented.
    pub fn sign(&self) -> i8 {
        if let Some(r) = self.rational_part() {
            return r.signum_exact();
        }
        let field = self.field.as_ref().expect("irrational element without a field");
        let c = Poly::new(self.coords.clone());
        let chain = SturmChain::new(&c);
        let (mut lo, mut hi) = field.interval.clone();
        loop {
            if chain.count_open(&lo, &hi) == 0 {
                let mid = (&lo + &hi) / rat(2);
                return poly_sign_at(&c, &mid);
            }
            let mid = field.chain.split_point(&lo, &hi);
            if field.chain.count_open(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        match (self.clone() - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.field {
            None => rational_to_f64(&self.coords[0]),
            Some(f) => {
                let a = f.approx;
                self.coords
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| acc * a + rational_to_f64(c))
            }
        }
    }

    /// Matrix of multiplication by `self` on the power basis, column `j` = `self · α^j`.
    pub fn multiplication_matrix(&self, field: &Arc<RealAlgebraicField>) -> Vec<Vec<Rational>> {
        let d = field.degree();
        let me = self.promote(field);
        let mut cols = Vec::with_capacity(d);
        let mut basis = FieldElement::one().promote(field);
        let alpha = field.generator();
        for _ in 0..d {
            cols.push((me.clone() * &basis).coords_padded(d));
            basis = basis * &alpha;
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm N_{K/ℚ}.
    pub fn norm(&self) -> Rational {
        match &self.field {
            None => self.coords[0].clone(),
            Some(f) if f.degree() == 1 => self.rational_part().unwrap(),
            Some(f) => rational_det(self.multiplication_matrix(f)),
        }
    }

    fn joint_field(&self, other: &Self) -> Option<Arc<RealAlgebraicField>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b) || **a == **b, "{}", Error::FieldMismatch);
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let field = self.joint_field(other);
        let n = self.coords.len().max(other.coords.len());
        let coords: Vec<Rational> = (0..n)
            .map(|k| {
                let a = self.coords.get(k).cloned().unwrap_or_else(Rational::zero);
                let b = other.coords.get(k);
                match (b, negate) {
                    (None, _) => a,
                    (Some(b), false) => a + b,
                    (Some(b), true) => a - b,
                }
            })
            .collect();
        match field {
            None => Self::rational(coords.into_iter().next().unwrap()),
            Some(f) => FieldElement {
                coords: pad(coords, f.degree()),
                field: Some(f),
            },
        }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        match self.joint_field(other) {
            None => Self::rational(&self.coords[0] * &other.coords[0]),
            Some(f) => {
                if self.field.is_none() || other.field.is_none() {
                    let (r, e) = if self.field.is_none() { (self, other) } else { (other, self) };
                    let s = &r.coords[0];
                    return FieldElement {
                        coords: e.coords.iter().map(|c| c * s).collect(),
                        field: Some(f),
                    };
                }
                let mut prod = vec![Rational::zero(); self.coords.len() + other.coords.len() - 1];
                for (i, a) in self.coords.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.coords.iter().enumerate() {
                        prod[i + j] = &prod[i + j] + &(a * b);
                    }
                }
                FieldElement {
                    coords: f.reduce(prod),
                    field: Some(f),
                }
            }
        }
    }

    fn recip_impl(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        match &self.field {
            None => Self::rational(self.coords[0].recip()),
            Some(f) => {
                let c = Poly::new(self.coords.clone());
                let (g, s, _) = Poly::ext_gcd(&c, &f.min_poly);
                debug_assert!(g.deg() == 0);
                FieldElement::from_coords(s.into_coeffs(), Some(f.clone()))
            }
        }
    }
}

fn pad(mut v: Vec<Rational>, d: usize) -> Vec<Rational> {
    v.resize(d.max(v.len()), Rational::zero());
    v
}

/// Determinant of a small dense rational matrix by Gaussian elimination.
pub fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coords.len().max(other.coords.len());
        (0..n).all(|k| {
            let z = Rational::zero();
            self.coords.get(k).unwrap_or(&z) == other.coords.get(k).unwrap_or(&z)
        })
    }
}

impl Eq for FieldElement {}

impl Zero for FieldElement {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl One for FieldElement {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                $body(&self, &o)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &'a FieldElement) -> FieldElement {
                $body(&self, o)
            }
        }
        impl<'a, 'b> $tr<&'b FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &'b FieldElement) -> FieldElement {
                $body(self, o)
            }
        }
    };
}

binop!(Add, add, |a: &FieldElement, b: &FieldElement| a.add_impl(b, false));
binop!(Sub, sub, |a: &FieldElement, b: &FieldElement| a.add_impl(b, true));
binop!(Mul, mul, |a: &FieldElement, b: &FieldElement| a.mul_impl(b));
binop!(Div, div, |a: &FieldElement, b: &FieldElement| a.mul_impl(&b.recip_impl()));

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            coords: self.coords.into_iter().map(|c| -c).collect(),
            field: self.field,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -self.clone()
    }
}

impl serde::Serialize for FieldElement {
    /// `["p/q"]` for rational values, otherwise all field-degree coordinates.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let coords: Vec<String> = match (&self.field, self.rational_part()) {
            (Some(f), None) => self.coords_padded(f.degree()).iter().map(format_rational).collect(),
            (_, r) => vec![format_rational(&r.expect("rational value"))],
        };
        let mut seq = s.serialize_seq(Some(coords.len()))?;
        for c in &coords {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl Scalar for FieldElement {
    fn recip(&self) -> Self {
        self.recip_impl()
    }

    fn from_rational(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl OrderedScalar for FieldElement {
    fn signum_exact(&self) -> i8 {
        self.sign()
    }

    fn abs_bound(&self) -> Rational {
        match &self.field {
            None => self.coords[0].abs(),
            Some(f) => {
                let a = f.interval.0.abs().max(f.interval.1.abs());
                let mut pow = Rational::one();
                let mut acc = Rational::zero();
                for c in &self.coords {
                    acc += c.abs() * &pow;
                    pow *= &a;
                }
                acc
            }
        }
    }
}

/// The common field of a collection of elements, if any carries one.
pub fn common_field<'a>(
    elems: impl IntoIterator<Item = &'a FieldElement>,
) -> Option<Arc<RealAlgebraicField>> {
    elems.into_iter().find_map(|e| e.field().cloned())
}

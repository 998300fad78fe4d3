//! Factorization over ℚ(α) by norms, and roots of real polynomials in ℚ(α)(i).

use std::sync::Arc;

use num_traits::{One, Zero};

use super::factor::factor_over_q;
use super::field::{FieldElement, RealAlgebraicField};
use super::poly::{interpolate, Poly};
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

pub type KPoly = Poly<FieldElement>;

/// Embeds a rational polynomial.
pub fn lift_rational(p: &Poly<Rational>) -> KPoly {
    p.map(|c| FieldElement::rational(c.clone()))
}

/// The rational polynomial if every coefficient is rational.
pub fn rational_poly(p: &KPoly) -> Option<Poly<Rational>> {
    p.coeffs()
        .iter()
        .map(|c| c.rational_part())
        .collect::<Option<Vec<_>>>()
        .map(Poly::new)
}

/// `N(h)(x) = Π_σ h^σ(x)`, computed by evaluating element norms and interpolating.
pub fn norm_poly(h: &KPoly, field: &Arc<RealAlgebraicField>) -> Poly<Rational> {
    let d = field.degree();
    let n = h.deg() * d;
    let pts: Vec<(Rational, Rational)> = (0..=n as i64)
        .map(|x| {
            let v = h.eval(&FieldElement::int(x)).promote(field);
            (rat(x), v.norm())
        })
        .collect();
    interpolate(&pts)
}

/// Monic irreducible factors over the field with multiplicities. With no field, this
/// is factorization over ℚ.
pub fn factor_over_field(
    p: &KPoly,
    field: Option<&Arc<RealAlgebraicField>>,
) -> Result<Vec<(KPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = match field {
        Some(f) if f.degree() > 1 => f,
        _ => {
            let q = rational_poly(p).ok_or(Error::FieldMismatch)?;
            return Ok(factor_over_q(&q)?
                .into_iter()
                .map(|(f, k)| (lift_rational(&f), k))
                .collect());
        }
    };
    if let Some(q) = rational_poly(p) {
        // a ℚ-irreducible factor may still split over the field
        let mut out = Vec::new();
        for (f, k) in factor_over_q(&q)? {
            for g in factor_squarefree_over_field(&lift_rational(&f), field) {
                out.push((g, k));
            }
        }
        return Ok(out);
    }
    let mut out = Vec::new();
    for (s, k) in p.squarefree_decomposition() {
        for g in factor_squarefree_over_field(&s, field) {
            out.push((g, k));
        }
    }
    Ok(out)
}

/// Trager's algorithm on a monic squarefree polynomial.
fn factor_squarefree_over_field(h: &KPoly, field: &Arc<RealAlgebraicField>) -> Vec<KPoly> {
    if h.deg() <= 1 {
        return vec![h.monic()];
    }
    let alpha = field.generator();
    for s in shifts() {
        let shift = alpha.clone() * &FieldElement::int(s);
        // h_s(x) = h(x − sα)
        let hs = h.shift(&-shift.clone());
        let norm = norm_poly(&hs, field);
        if !norm.is_squarefree() {
            continue;
        }
        let factors = factor_over_q(&norm).expect("nonzero norm");
        if factors.len() == 1 {
            return vec![h.monic()];
        }
        let mut out = Vec::new();
        for (q, _) in factors {
            let g = Poly::gcd(&hs, &lift_rational(&q));
            if g.deg() >= 1 {
                out.push(g.shift(&shift));
            }
        }
        return out;
    }
    unreachable!()
}

fn shifts() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// A complex number `re + i·im` with both parts in the field.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexValue {
    pub re: FieldElement,
    pub im: FieldElement,
}

impl ComplexValue {
    pub fn real(re: FieldElement) -> Self {
        ComplexValue {
            re,
            im: FieldElement::zero(),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexValue {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// All complex roots of a polynomial with real field coefficients, each of the form
/// `a + bi` with `a, b` in the field, with multiplicities. Fails naming the first
/// irreducible factor whose roots leave the field extended by `i`.
pub fn complex_roots(
    p: &KPoly,
    field: Option<&Arc<RealAlgebraicField>>,
) -> Result<Vec<(ComplexValue, usize)>> {
    let mut out = Vec::new();
    for (f, k) in factor_over_field(p, field)? {
        match f.deg() {
            1 => out.push((ComplexValue::real(-f.coeff(0)), k)),
            2 => {
                let (c, b) = (f.coeff(0), f.coeff(1));
                let four = FieldElement::int(4);
                let disc = b.clone() * &b - four * &c;
                if disc.sign() >= 0 {
                    return Err(Error::WeightsOutsideField {
                        factor: f.to_string(),
                        reason: "has real roots outside the field".into(),
                    });
                }
                let re = -b.clone() / FieldElement::int(2);
                let im_sq = c - re.clone() * &re;
                let y2 = Poly::new(vec![-im_sq, FieldElement::zero(), FieldElement::one()]);
                let root = factor_over_field(&y2, field)?
                    .into_iter()
                    .find(|(g, _)| g.deg() == 1)
                    .map(|(g, _)| g.coeff(0).abs());
                let im = root.ok_or_else(|| Error::WeightsOutsideField {
                    factor: f.to_string(),
                    reason: "has imaginary parts outside the field".into(),
                })?;
                out.push((ComplexValue { re: re.clone(), im: im.clone() }, k));
                out.push((ComplexValue { re, im: -im }, k));
            }
            _ => {
                return Err(Error::WeightsOutsideField {
                    factor: f.to_string(),
                    reason: "is irreducible of degree greater than two".into(),
                })
            }
        }
    }
    Ok(out)
}

/// Roots in the field itself (linear factors), with multiplicities.
pub fn roots_in_field(
    p: &KPoly,
    field: Option<&Arc<RealAlgebraicField>>,
) -> Result<Vec<(FieldElement, usize)>> {
    Ok(factor_over_field(p, field)?
        .into_iter()
        .filter(|(f, _)| f.deg() == 1)
        .map(|(f, k)| (-f.coeff(0), k))
        .collect())
}

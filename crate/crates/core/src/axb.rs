//! One-parameter systems `t ↦ e^{tD}` and the generalized ax+b-groups `𝒱 ⋊_D ℝ`.
//!
//! Everything is decided from spectral data: the imaginary parts `θ` of purely
//! imaginary eigenvalues generate `S_D ⊆ ℝ`, and the verdicts combine closedness of
//! `S_D` with semisimplicity of `D` and whether `σ(D) ⊆ iℝ`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::exactnum::kfactor::factor_over_field;
use crate::exactnum::rational::rational_to_f64;
use crate::exactnum::sturm::cauchy_index;
use crate::exactnum::{ratio, FieldElement, KPoly, Poly, RealAlgebraicField, Rational, SturmChain};
use crate::latticetest::scalar_set_closed;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralEigenvalue {
    pub re: FieldElement,
    pub im: FieldElement,
    pub multiplicity: usize,
    pub semisimple: bool,
}

#[derive(Clone, Debug)]
pub enum SpectralSpec {
    Matrix {
        matrix: Matrix,
        field: Option<Arc<RealAlgebraicField>>,
    },
    Explicit {
        dim: usize,
        eigenvalues: Vec<SpectralEigenvalue>,
    },
}

impl SpectralSpec {
    pub fn matrix(matrix: Matrix, field: Option<Arc<RealAlgebraicField>>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!("D is {}×{}", matrix.rows(), matrix.cols())));
        }
        Ok(SpectralSpec::Matrix { matrix, field })
    }

    /// Checks that the list is closed under conjugation with matching data and that the
    /// multiplicities add up to `dim`.
    pub fn explicit(dim: usize, eigenvalues: Vec<SpectralEigenvalue>) -> Result<Self> {
        let total: usize = eigenvalues.iter().map(|e| e.multiplicity).sum();
        if total != dim {
            return Err(Error::InvalidSpectrum(format!("multiplicities sum to {total}, expected {dim}")));
        }
        for (i, e) in eigenvalues.iter().enumerate() {
            if e.multiplicity == 0 {
                return Err(Error::InvalidSpectrum(format!("eigenvalue {} has multiplicity 0", i + 1)));
            }
            let partner = eigenvalues.iter().any(|f| {
                f.re == e.re && f.im == -e.im.clone() && f.multiplicity == e.multiplicity && f.semisimple == e.semisimple
            });
            if !partner {
                return Err(Error::InvalidSpectrum(format!(
                    "eigenvalue {} has no conjugate partner with the same multiplicity",
                    i + 1
                )));
            }
        }
        Ok(SpectralSpec::Explicit { dim, eigenvalues })
    }

    /// Eigenvalues with their conjugates, from `(re, im, multiplicity, semisimple)`
    /// entries with `im ≥ 0`.
    pub fn explicit_closed(dim: usize, upper: Vec<SpectralEigenvalue>) -> Result<Self> {
        let mut all = Vec::new();
        for e in upper {
            if !e.im.is_zero() {
                all.push(SpectralEigenvalue {
                    im: -e.im.clone(),
                    ..e.clone()
                });
            }
            all.push(e);
        }
        Self::explicit(dim, all)
    }

    pub fn dim(&self) -> usize {
        match self {
            SpectralSpec::Matrix { matrix, .. } => matrix.rows(),
            SpectralSpec::Explicit { dim, .. } => *dim,
        }
    }
}

/// A real algebraic number: the root of the monic irreducible `factor` in `(lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicTheta {
    pub factor: KPoly,
    pub lo: Rational,
    pub hi: Rational,
}

impl AlgebraicTheta {
    fn chain(&self) -> SturmChain<FieldElement> {
        SturmChain::new(&self.factor)
    }

    fn refined(&self, width: &Rational) -> (Rational, Rational) {
        self.chain().refine(self.lo.clone(), self.hi.clone(), width)
    }

    pub fn approx(&self) -> f64 {
        let (lo, hi) = self.refined(&ratio(1, 1 << 50));
        rational_to_f64(&((lo + hi) / Rational::from_integer(2.into())))
    }
}

/// A generator `θ > 0` of `S_D`.
#[derive(Clone, Debug, PartialEq)]
pub enum Theta {
    Exact(FieldElement),
    Algebraic(AlgebraicTheta),
}

impl Theta {
    pub fn approx(&self) -> f64 {
        match self {
            Theta::Exact(x) => x.to_f64(),
            Theta::Algebraic(a) => a.approx(),
        }
    }
}

impl Serialize for Theta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            Theta::Exact(x) => {
                m.serialize_entry("exact", x)?;
            }
            Theta::Algebraic(a) => {
                m.serialize_entry("factor", a.factor.coeffs())?;
                m.serialize_entry("interval", &[a.lo.to_string(), a.hi.to_string()])?;
                m.serialize_entry("approx", &format!("{:.12}", a.approx()))?;
            }
        }
        m.end()
    }
}

/// `h(iμ) = R(μ) + i·I(μ)`.
pub fn imaginary_axis_parts(h: &KPoly) -> (KPoly, KPoly) {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (k, c) in h.coeffs().iter().enumerate() {
        let (r, i) = match k % 4 {
            0 => (c.clone(), FieldElement::zero()),
            1 => (FieldElement::zero(), c.clone()),
            2 => (-c.clone(), FieldElement::zero()),
            _ => (FieldElement::zero(), -c.clone()),
        };
        re.push(r);
        im.push(i);
    }
    (Poly::new(re), Poly::new(im))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FactorKind {
    Imaginary,
    Positive,
    Negative,
    Mixed,
}

/// Real roots `μ` of `gcd(R, I)`, i.e. the points `iμ` where `h` meets the imaginary axis.
fn axis_polynomial(h: &KPoly) -> KPoly {
    let (r, i) = imaginary_axis_parts(h);
    Poly::gcd(&r, &i)
}

/// Where the roots of an irreducible factor lie relative to the imaginary axis.
fn factor_kind(h: &KPoly) -> FactorKind {
    let g = axis_polynomial(h);
    let on_axis = if g.is_constant() { 0 } else { SturmChain::new(&g).count_all() };
    if on_axis == h.deg() {
        return FactorKind::Imaginary;
    }
    if on_axis > 0 {
        return FactorKind::Mixed;
    }
    // arg h(iy) turns by π(n_left − n_right) along the imaginary axis
    let (r, i) = imaginary_axis_parts(h);
    let diff = if r.deg() > i.deg() { -cauchy_index(&i, &r) } else { cauchy_index(&r, &i) };
    let d = h.deg() as i64;
    let right = (d - diff) / 2;
    if right == d {
        FactorKind::Positive
    } else if right == 0 {
        FactorKind::Negative
    } else {
        FactorKind::Mixed
    }
}

fn matrix_factors(m: &Matrix, field: Option<&Arc<RealAlgebraicField>>) -> Result<Vec<(KPoly, usize, FactorKind)>> {
    Ok(factor_over_field(&m.charpoly(), field)?
        .into_iter()
        .map(|(h, k)| {
            let kind = factor_kind(&h);
            (h, k, kind)
        })
        .collect())
}

/// Positive roots of an irreducible factor, as exact values or isolating intervals.
fn positive_roots(g: &KPoly) -> Vec<Theta> {
    if g.deg() == 1 {
        let x = -g.coeff(0) / g.leading();
        return if x.sign() > 0 { vec![Theta::Exact(x)] } else { Vec::new() };
    }
    let chain = SturmChain::new(g);
    let mut out = Vec::new();
    for (mut lo, mut hi) in chain.isolate() {
        while lo.is_negative() && hi.is_positive() {
            let w = (&hi - &lo) / Rational::from_integer(2.into());
            (lo, hi) = chain.refine(lo, hi, &w);
        }
        if hi.is_positive() {
            out.push(Theta::Algebraic(AlgebraicTheta {
                factor: g.monic(),
                lo,
                hi,
            }));
        }
    }
    out
}

/// Positive generators `θ` of `S_D = ⟨ Im(σ(D) ∩ iℝ) ⟩`.
pub fn purely_imaginary_thetas(spec: &SpectralSpec) -> Result<Vec<Theta>> {
    match spec {
        SpectralSpec::Explicit { eigenvalues, .. } => {
            let mut out: Vec<FieldElement> = Vec::new();
            for e in eigenvalues {
                if e.re.is_zero() && e.im.sign() > 0 && !out.contains(&e.im) {
                    out.push(e.im.clone());
                }
            }
            Ok(out.into_iter().map(Theta::Exact).collect())
        }
        SpectralSpec::Matrix { matrix, field } => {
            let mut out = Vec::new();
            for (h, _, _) in matrix_factors(matrix, field.as_ref())? {
                let g = axis_polynomial(&h);
                if g.is_constant() {
                    continue;
                }
                for (f, _) in factor_over_field(&g, field.as_ref())? {
                    out.extend(positive_roots(&f));
                }
            }
            Ok(out)
        }
    }
}

fn rational_root(c: &Rational, k: u32) -> Vec<Rational> {
    let root = |n: &BigInt| -> Option<BigInt> {
        if n.is_negative() && k.is_multiple_of(2) {
            return None;
        }
        let r = n.nth_root(k);
        (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
    };
    match (root(c.numer()), root(c.denom())) {
        (Some(a), Some(b)) => {
            let r = Rational::new(a, b);
            if k.is_multiple_of(2) {
                vec![r.clone(), -r]
            } else {
                vec![r]
            }
        }
        _ => Vec::new(),
    }
}

/// Whether `b / a` is rational for two algebraic θ's, by exact scaling of factors.
///
/// If `b = r·a` then `r^d h_a(x / r)` is a monic irreducible polynomial vanishing at `b`,
/// hence equal to `h_b`; the candidates for `r` come from one coefficient ratio. When
/// `h_a = h_b` the scaling permutes a finite root set, so only `r = ±1` can occur and
/// `r = −1` requires `h(−x) ∝ h(x)`.
fn algebraic_ratio(a: &AlgebraicTheta, b: &AlgebraicTheta) -> Result<Option<Rational>> {
    let d = a.factor.deg();
    if b.factor.deg() != d {
        return Ok(None);
    }
    let k = (0..d).find(|&k| !a.factor.coeff(k).is_zero()).expect("irreducible factor of degree ≥ 2");
    let (ak, bk) = (a.factor.coeff(k), b.factor.coeff(k));
    if bk.is_zero() {
        return Ok(None);
    }
    let c = match (bk / ak).rational_part() {
        Some(c) => c,
        None => return Ok(None),
    };
    let mut found = None;
    for r in rational_root(&c, (d - k) as u32) {
        let rf = FieldElement::rational(r.clone());
        let scaled = (0..=d).all(|j| {
            b.factor.coeff(j) == a.factor.coeff(j) * &num_traits::pow(rf.clone(), d - j)
        });
        if scaled && same_root_after_scaling(a, b, &r) {
            found = Some(r);
            break;
        }
    }
    if a.factor == b.factor {
        let reflected = Poly::new(
            a.factor.coeffs().iter().enumerate().map(|(j, c)| if j % 2 == 1 { -c.clone() } else { c.clone() }).collect(),
        );
        let symmetric = Poly::gcd(&a.factor, &reflected).deg() == d;
        let exact = found.as_ref().map(|r| if r.is_one() { a == b } else { r == &-Rational::one() && symmetric });
        let consistent = match &found {
            None => true,
            Some(_) => exact == Some(true),
        };
        if !consistent {
            return Err(Error::NumericDisagreement(format!(
                "roots of one irreducible factor {:?} have an unexpected rational ratio",
                a.factor
            )));
        }
    }
    if let Some(r) = &found {
        let q = b.approx() / a.approx();
        let rf = rational_to_f64(r);
        if (q - rf).abs() > 1e-9 * rf.abs().max(1.0) {
            return Err(Error::NumericDisagreement(format!(
                "exact ratio {r} but interval estimate {q}"
            )));
        }
    }
    Ok(found)
}

/// Whether `b / r` is the root of `h_a` isolated by `(a.lo, a.hi)`.
fn same_root_after_scaling(a: &AlgebraicTheta, b: &AlgebraicTheta, r: &Rational) -> bool {
    let ca = a.chain();
    let cb = b.chain();
    let (mut alo, mut ahi) = (a.lo.clone(), a.hi.clone());
    let (mut blo, mut bhi) = (b.lo.clone(), b.hi.clone());
    loop {
        let (jlo, jhi) = if r.is_positive() { (&blo / r, &bhi / r) } else { (&bhi / r, &blo / r) };
        if ca.count_open(&jlo, &jhi) == 1 {
            let lo = if jlo > alo { jlo } else { alo.clone() };
            let hi = if jhi < ahi { jhi } else { ahi.clone() };
            return lo < hi && ca.count_open(&lo, &hi) == 1;
        }
        let wb = (&bhi - &blo) / Rational::from_integer(2.into());
        (blo, bhi) = cb.refine(blo, bhi, &wb);
        let wa = (&ahi - &alo) / Rational::from_integer(2.into());
        (alo, ahi) = ca.refine(alo, ahi, &wa);
    }
}

/// `ℚ`-ratio of two θ's, if rational.
pub fn theta_ratio(a: &Theta, b: &Theta) -> Result<Option<Rational>> {
    Ok(match (a, b) {
        (Theta::Exact(x), Theta::Exact(y)) => (y.clone() / x.clone()).rational_part(),
        // a root of an irreducible factor of degree ≥ 2 is not in the field
        (Theta::Exact(_), Theta::Algebraic(_)) | (Theta::Algebraic(_), Theta::Exact(_)) => None,
        (Theta::Algebraic(x), Theta::Algebraic(y)) => algebraic_ratio(x, y)?,
    })
}

/// `S_D` is closed iff all θ's are rational multiples of one of them.
pub fn s_d_closed(thetas: &[Theta]) -> Result<bool> {
    let exact: Option<Vec<FieldElement>> = thetas
        .iter()
        .map(|t| match t {
            Theta::Exact(x) => Some(x.clone()),
            Theta::Algebraic(_) => None,
        })
        .collect();
    if let Some(xs) = exact {
        return Ok(scalar_set_closed(&xs));
    }
    let first = &thetas[0];
    for t in &thetas[1..] {
        if theta_ratio(first, t)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D` is semisimple iff the squarefree part of its characteristic polynomial kills it.
pub fn is_semisimple(spec: &SpectralSpec) -> bool {
    match spec {
        SpectralSpec::Explicit { eigenvalues, .. } => eigenvalues.iter().all(|e| e.semisimple),
        SpectralSpec::Matrix { matrix, .. } => {
            if matrix.rows() == 0 {
                return true;
            }
            matrix.eval_poly(&matrix.charpoly().squarefree_part()).is_zero()
        }
    }
}

pub fn purely_imaginary_spectrum(spec: &SpectralSpec) -> Result<bool> {
    Ok(match spec {
        SpectralSpec::Explicit { eigenvalues, .. } => eigenvalues.iter().all(|e| e.re.is_zero()),
        SpectralSpec::Matrix { matrix, field } => {
            matrix_factors(matrix, field.as_ref())?.iter().all(|(_, _, k)| *k == FactorKind::Imaginary)
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenDecompositionReal {
    #[serde(rename = "V_minus")]
    pub v_minus: Subspace,
    #[serde(rename = "V_zero")]
    pub v_zero: Subspace,
    #[serde(rename = "V_plus")]
    pub v_plus: Subspace,
    /// `D|_{𝒱₀}` in the basis of `v_zero`.
    #[serde(rename = "D0")]
    pub d0: Matrix,
}

/// `𝒱 = 𝒱₋ ⊕ 𝒱₀ ⊕ 𝒱₊` by the sign of the real parts of eigenvalues, one irreducible
/// factor at a time. A factor with roots on both sides cannot be split over the field.
pub fn real_spectral_split(d: &Matrix, field: Option<&Arc<RealAlgebraicField>>) -> Result<EigenDecompositionReal> {
    let n = d.rows();
    let mut parts = [Subspace::zero(n), Subspace::zero(n), Subspace::zero(n)];
    for (h, _, kind) in matrix_factors(d, field)? {
        let slot = match kind {
            FactorKind::Negative => 0,
            FactorKind::Imaginary => 1,
            FactorKind::Positive => 2,
            FactorKind::Mixed => return Err(Error::MixedFactor(format!("{h:?}"))),
        };
        let k = Subspace::kernel(&d.eval_poly(&h).pow(n));
        parts[slot] = parts[slot].sum(&k);
    }
    let [v_minus, v_zero, v_plus] = parts;
    if !Subspace::is_direct_sum_decomposition(&[&v_minus, &v_zero, &v_plus], n) {
        return Err(Error::Internal("spectral summands do not form a direct sum".into()));
    }
    if ![&v_minus, &v_zero, &v_plus].iter().all(|s| s.is_invariant_under(d)) {
        return Err(Error::Internal("spectral summand is not D-invariant".into()));
    }
    let b = v_zero.basis_matrix();
    let d0 = if v_zero.is_zero() {
        Matrix::zeros(0, 0)
    } else {
        b.solve_matrix(&d.mul(&b)).expect("invariant subspace")
    };
    Ok(EigenDecompositionReal { v_minus, v_zero, v_plus, d0 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OneParameterClass {
    AllRegular,
    IntGammaDense,
    IntGammaEmpty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupClass {
    TypeI,
    Antiliminary,
    Neither,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxbVerdict {
    pub s_d_generators: Vec<Theta>,
    pub s_d_closed: bool,
    pub semisimple: bool,
    pub purely_imaginary_spectrum: bool,
    pub one_parameter: OneParameterClass,
    pub group_class: GroupClass,
}

fn one_parameter_from(closed: bool, imaginary: bool, semisimple: bool) -> OneParameterClass {
    if closed {
        OneParameterClass::AllRegular
    } else if imaginary && semisimple {
        OneParameterClass::IntGammaEmpty
    } else {
        OneParameterClass::IntGammaDense
    }
}

pub fn classify_one_parameter(spec: &SpectralSpec) -> Result<OneParameterClass> {
    let closed = s_d_closed(&purely_imaginary_thetas(spec)?)?;
    Ok(one_parameter_from(closed, purely_imaginary_spectrum(spec)?, is_semisimple(spec)))
}

pub fn classify_group(spec: &SpectralSpec) -> Result<AxbVerdict> {
    let thetas = purely_imaginary_thetas(spec)?;
    let closed = s_d_closed(&thetas)?;
    let semisimple = is_semisimple(spec);
    let imaginary = purely_imaginary_spectrum(spec)?;
    let group_class = if closed {
        GroupClass::TypeI
    } else if semisimple && imaginary {
        GroupClass::Antiliminary
    } else {
        GroupClass::Neither
    };
    Ok(AxbVerdict {
        s_d_generators: thetas,
        s_d_closed: closed,
        semisimple,
        purely_imaginary_spectrum: imaginary,
        one_parameter: one_parameter_from(closed, imaginary, semisimple),
        group_class,
    })
}

/// Spectrum `{±i, ±iθ}` of the Mautner system with `θ = √2`.
pub fn mautner_spectrum() -> SpectralSpec {
    let k = RealAlgebraicField::sqrt(2).expect("√2 field");
    let e = |im: FieldElement| SpectralEigenvalue {
        re: FieldElement::zero(),
        im,
        multiplicity: 1,
        semisimple: true,
    };
    SpectralSpec::explicit_closed(4, vec![e(FieldElement::one()), e(k.generator())]).expect("Mautner spectrum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn fe(x: i64) -> FieldElement {
        FieldElement::int(x)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| fe(v)).collect()).collect())
    }

    fn mat(rows: &[&[i64]]) -> SpectralSpec {
        SpectralSpec::matrix(m(rows), None).unwrap()
    }

    fn eig(re: FieldElement, im: FieldElement, multiplicity: usize, semisimple: bool) -> SpectralEigenvalue {
        SpectralEigenvalue { re, im, multiplicity, semisimple }
    }

    #[test]
    fn thetas_of_examples() {
        assert_eq!(purely_imaginary_thetas(&mat(&[&[0, -1], &[1, 0]])).unwrap(), vec![Theta::Exact(fe(1))]);
        assert!(purely_imaginary_thetas(&mat(&[&[1, 0], &[0, -1]])).unwrap().is_empty());
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let t = purely_imaginary_thetas(&mautner_spectrum()).unwrap();
        assert_eq!(t, vec![Theta::Exact(fe(1)), Theta::Exact(k.generator())]);
    }

    #[test]
    fn closedness() {
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let a = k.generator();
        let ex = |xs: Vec<FieldElement>| xs.into_iter().map(Theta::Exact).collect::<Vec<_>>();
        assert!(s_d_closed(&ex(vec![fe(1), fe(2)])).unwrap());
        assert!(!s_d_closed(&ex(vec![fe(1), a.clone()])).unwrap());
        assert!(s_d_closed(&ex(vec![a.clone(), a.clone() * &fe(2), -a])).unwrap());
        assert!(s_d_closed(&[]).unwrap());
    }

    #[test]
    fn algebraic_thetas_over_q() {
        // x² + 2 and x² + 8 have roots ±i√2 and ±2i√2: ratio 2
        let d = m(&[&[0, -2, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -8], &[0, 0, 1, 0]]);
        let t = purely_imaginary_thetas(&SpectralSpec::matrix(d.clone(), None).unwrap()).unwrap();
        assert_eq!(t.len(), 2);
        assert!(matches!(t[0], Theta::Algebraic(_)));
        assert!(s_d_closed(&t).unwrap());
        assert_eq!(theta_ratio(&t[0], &t[1]).unwrap().map(|r| r.abs()), Some(rat(2)));
        // x² + 2 and x² + 3: ratio √(3/2)
        let d = m(&[&[0, -2, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -3], &[0, 0, 1, 0]]);
        let spec = SpectralSpec::matrix(d, None).unwrap();
        assert!(!s_d_closed(&purely_imaginary_thetas(&spec).unwrap()).unwrap());
        assert_eq!(classify_group(&spec).unwrap().group_class, GroupClass::Antiliminary);
        // x⁴ + 4x² + 2 has roots ±i√(2 ± √2), two positive θ's from one factor
        let d = m(&[&[0, 0, 0, -2], &[1, 0, 0, 0], &[0, 1, 0, -4], &[0, 0, 1, 0]]);
        let t = purely_imaginary_thetas(&SpectralSpec::matrix(d, None).unwrap()).unwrap();
        assert_eq!(t.len(), 2);
        assert!(!s_d_closed(&t).unwrap());
        // x⁴ − 2 meets the imaginary axis at ±i·2^(1/4) and also has real roots
        let d = m(&[&[0, 0, 0, 2], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let spec = SpectralSpec::matrix(d.clone(), None).unwrap();
        assert_eq!(purely_imaginary_thetas(&spec).unwrap().len(), 1);
        assert!(!purely_imaginary_spectrum(&spec).unwrap());
        assert!(matches!(real_spectral_split(&d, None), Err(Error::MixedFactor(_))));
    }

    #[test]
    fn semisimplicity() {
        assert!(is_semisimple(&mat(&[&[1, 0], &[0, 1]])));
        assert!(!is_semisimple(&mat(&[&[0, 1], &[0, 0]])));
        assert!(!is_semisimple(&mat(&[&[0, -1, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, -1], &[0, 0, 1, 0]])));
    }

    #[test]
    fn spectral_split() {
        let s = real_spectral_split(&m(&[&[1, 0], &[0, -1]]), None).unwrap();
        assert_eq!((s.v_plus.dim(), s.v_zero.dim(), s.v_minus.dim()), (1, 0, 1));
        assert!(s.v_plus.contains(&[fe(1), fe(0)]));
        let s = real_spectral_split(&m(&[&[0, -1], &[1, 0]]), None).unwrap();
        assert_eq!(s.v_zero.dim(), 2);
        let s = real_spectral_split(&m(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]), None).unwrap();
        assert_eq!((s.v_plus.dim(), s.v_zero.dim()), (1, 2));
        assert_eq!(s.d0.rows(), 2);
        // roots −1 ± i lie to the left
        let s = real_spectral_split(&m(&[&[-1, -1], &[1, -1]]), None).unwrap();
        assert_eq!(s.v_minus.dim(), 2);
        assert!(matches!(real_spectral_split(&m(&[&[0, 2], &[1, 0]]), None), Err(Error::MixedFactor(_))));
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let split = real_spectral_split(&m(&[&[0, 2], &[1, 0]]), Some(&k)).unwrap();
        assert_eq!((split.v_plus.dim(), split.v_minus.dim()), (1, 1));
    }

    #[test]
    fn verdict_table() {
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let a = k.generator();
        let v = classify_group(&mautner_spectrum()).unwrap();
        assert_eq!((v.group_class, v.one_parameter), (GroupClass::Antiliminary, OneParameterClass::IntGammaEmpty));
        let spec = SpectralSpec::explicit_closed(
            4,
            vec![eig(fe(0), fe(1), 1, true), eig(fe(0), FieldElement::rational(ratio(2, 3)), 1, true)],
        )
        .unwrap();
        assert_eq!(classify_group(&spec).unwrap().group_class, GroupClass::TypeI);
        assert_eq!(classify_one_parameter(&spec).unwrap(), OneParameterClass::AllRegular);
        let spec = SpectralSpec::explicit_closed(
            5,
            vec![eig(fe(1), fe(0), 1, true), eig(fe(0), fe(1), 1, true), eig(fe(0), a.clone(), 1, true)],
        )
        .unwrap();
        assert_eq!(classify_group(&spec).unwrap().group_class, GroupClass::Neither);
        let spec = SpectralSpec::explicit_closed(6, vec![eig(fe(0), fe(1), 2, false), eig(fe(0), a, 1, true)]).unwrap();
        let v = classify_group(&spec).unwrap();
        assert_eq!((v.group_class, v.one_parameter), (GroupClass::Neither, OneParameterClass::IntGammaDense));
        assert_eq!(classify_group(&mat(&[&[1, 0], &[0, -1]])).unwrap().group_class, GroupClass::TypeI);
    }

    #[test]
    fn explicit_spec_validation() {
        let bad = SpectralSpec::explicit(1, vec![eig(fe(0), fe(1), 1, true)]);
        assert!(matches!(bad, Err(Error::InvalidSpectrum(_))));
        let bad = SpectralSpec::explicit(3, vec![eig(fe(1), fe(0), 1, true)]);
        assert!(matches!(bad, Err(Error::InvalidSpectrum(_))));
    }
}

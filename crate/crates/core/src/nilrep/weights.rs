//! Generalized weight spaces of `𝒱_ℂ` and the real form `𝒱̃`.
//!
//! Complex vectors of `𝒱_ℂ = 𝒱 ⊗ ℂ` use the `(u; w)` encoding of length `2n`, complex
//! matrices the realified `[[A, −B], [B, A]]` form.

use std::cmp::Ordering;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::rep::RepData;
use crate::error::{Error, Result};
use crate::exactla::eigen::{conjugate, realify_shifted, split_complex, times_i};
use crate::exactla::{Matrix, Subspace};
use crate::exactnum::{complex_roots, ComplexValue, FieldElement};

const GENERIC_SEED: u64 = 0x6e69_6c72_6570;

/// A weight `λ = re + i·im`, given by its values on the basis of 𝔤.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Weight {
    pub re: Vec<FieldElement>,
    pub im: Vec<FieldElement>,
}

impl Weight {
    pub fn conj(&self) -> Weight {
        Weight {
            re: self.re.clone(),
            im: self.im.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.iter().all(|x| x.is_zero())
    }

    /// Lexicographic on `(re, im)` with exact comparisons.
    pub fn cmp_exact(&self, other: &Weight) -> Ordering {
        self.re
            .iter()
            .chain(&self.im)
            .zip(other.re.iter().chain(&other.im))
            .map(|(a, b)| a.cmp_exact(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// Which part of `Λ = Λ′ ⊔ Λ″ ⊔ conj Λ″` the weight falls in.
    pub fn class(&self) -> WeightClass {
        match self.im.iter().find(|x| !x.is_zero()) {
            None => WeightClass::Real,
            Some(x) if x.sign() > 0 => WeightClass::Upper,
            Some(_) => WeightClass::Lower,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightClass {
    /// `Λ′`
    Real,
    /// `Λ″`: first nonzero imaginary coordinate positive.
    Upper,
    /// `conj Λ″`
    Lower,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightSpace {
    pub weight: Weight,
    pub class: WeightClass,
    /// `𝒱_ℂ^λ` in the `(u; w)` encoding.
    pub space: Subspace,
    /// `P_λ` in realified form.
    pub projection: Matrix,
}

impl WeightSpace {
    pub fn complex_dim(&self) -> usize {
        self.space.dim() / 2
    }

    /// `(Re P_λ, Im P_λ)` as `n × n` matrices.
    pub fn projection_parts(&self) -> (Matrix, Matrix) {
        let n = self.projection.rows() / 2;
        (self.projection.submatrix(0..n, 0..n), self.projection.submatrix(n..2 * n, 0..n))
    }

    /// A ℂ-basis of the space, as encoded vectors.
    pub fn complex_basis(&self) -> Vec<Vec<FieldElement>> {
        complex_basis(&self.space)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightData {
    pub space_dim: usize,
    /// Sorted by [`Weight::cmp_exact`].
    pub spaces: Vec<WeightSpace>,
}

impl WeightData {
    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.spaces.iter().map(|s| &s.weight)
    }

    pub fn of_class(&self, class: WeightClass) -> impl Iterator<Item = &WeightSpace> {
        self.spaces.iter().filter(move |s| s.class == class)
    }

    /// Position of the space belonging to `λ`.
    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.spaces.iter().position(|s| &s.weight == w)
    }
}

/// Greedy ℂ-basis of a subspace closed under multiplication by `i`.
pub fn complex_basis(space: &Subspace) -> Vec<Vec<FieldElement>> {
    let m = space.ambient_dim();
    let mut chosen = Vec::new();
    let mut span = Subspace::zero(m);
    for v in space.basis() {
        if !span.contains(v) {
            span = span.sum(&Subspace::span(m, [v.clone(), times_i(v)]));
            chosen.push(v.clone());
        }
    }
    chosen
}

/// Deterministic coefficients of the generic element used for the first splitting.
fn generic_coefficients(d: usize) -> Vec<FieldElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(GENERIC_SEED);
    (0..d).map(|_| FieldElement::int(rng.gen_range(1..=97))).collect()
}

/// `Ker_ℂ (M − μ)^n` in the `(u; w)` encoding.
fn complex_kernel(m: &Matrix, mu: &ComplexValue) -> Subspace {
    let n = m.rows();
    if mu.is_real() {
        let k = Subspace::kernel(&m.shift_diag(&mu.re).pow(n));
        let zero = vec![FieldElement::zero(); n];
        Subspace::span(
            2 * n,
            k.basis().iter().flat_map(|u| {
                [
                    u.iter().chain(&zero).cloned().collect::<Vec<_>>(),
                    zero.iter().chain(u).cloned().collect(),
                ]
            }),
        )
    } else {
        Subspace::kernel(&realify_shifted(m, &mu.re, &mu.im).pow(n))
    }
}

/// Splits every part along the generalized eigenspaces of `m`, returning the eigenvalue
/// attached to each new part.
fn refine(
    parts: Vec<(Subspace, Vec<ComplexValue>)>,
    m: &Matrix,
    r: &RepData,
    record: bool,
) -> Result<Vec<(Subspace, Vec<ComplexValue>)>> {
    let n = r.space_dim();
    let eig = complex_roots(&m.charpoly(), r.field())?;
    if eig.len() == 1 {
        return Ok(parts
            .into_iter()
            .map(|(s, mut w)| {
                if record {
                    w.push(eig[0].0.clone());
                }
                (s, w)
            })
            .collect());
    }
    let kernels: Vec<(ComplexValue, Subspace)> =
        eig.into_iter().map(|(mu, _)| (complex_kernel(m, &mu), mu)).map(|(k, mu)| (mu, k)).collect();
    let mut out = Vec::new();
    for (s, w) in parts {
        for (mu, k) in &kernels {
            let piece = if s.dim() == 2 * n { k.clone() } else { s.intersect(k) };
            if piece.is_zero() {
                continue;
            }
            let mut w = w.clone();
            if record {
                w.push(mu.clone());
            }
            out.push((piece, w));
        }
    }
    if out.iter().map(|(s, _)| s.dim()).sum::<usize>() != 2 * n {
        return Err(Error::Internal("generalized eigenspaces do not fill the space".into()));
    }
    Ok(out)
}

/// Joint generalized weight spaces: split along a generic element, then refine by each
/// basis element.
pub fn weight_decomposition(r: &RepData) -> Result<WeightData> {
    let n = r.space_dim();
    let d = r.algebra().dim();
    if n == 0 {
        return Ok(WeightData {
            space_dim: 0,
            spaces: Vec::new(),
        });
    }
    let mut parts = vec![(Subspace::full(2 * n), Vec::new())];
    if d > 1 {
        let generic = r.image_of(&generic_coefficients(d));
        parts = refine(parts, &generic, r, false)?;
    }
    for m in r.images() {
        parts = refine(parts, m, r, true)?;
    }
    let mut spaces: Vec<(Weight, Subspace)> = parts
        .into_iter()
        .map(|(s, w)| {
            let weight = Weight {
                re: w.iter().map(|z| z.re.clone()).collect(),
                im: w.iter().map(|z| z.im.clone()).collect(),
            };
            (weight, s.canonical())
        })
        .collect();
    spaces.sort_by(|a, b| a.0.cmp_exact(&b.0));
    let mut merged: Vec<(Weight, Subspace)> = Vec::new();
    for (w, s) in spaces {
        match merged.last_mut() {
            Some((lw, ls)) if *lw == w => *ls = ls.sum(&s),
            _ => merged.push((w, s)),
        }
    }
    check_weights_on_derived(r, &merged)?;
    let b = Matrix::from_columns(2 * n, &merged.iter().flat_map(|(_, s)| s.basis().to_vec()).collect::<Vec<_>>());
    let b_inv = b
        .inverse()
        .ok_or_else(|| Error::Internal("weight spaces are not independent".into()))?;
    let mut offset = 0;
    let mut out = Vec::new();
    for (weight, space) in merged {
        let k = space.dim();
        let projection = space.basis_matrix().mul(&b_inv.submatrix(offset..offset + k, 0..2 * n));
        offset += k;
        out.push(WeightSpace {
            class: weight.class(),
            weight,
            space,
            projection,
        });
    }
    let data = WeightData { space_dim: n, spaces: out };
    check_conjugation(&data)?;
    Ok(data)
}

fn check_weights_on_derived(r: &RepData, spaces: &[(Weight, Subspace)]) -> Result<()> {
    let derived = r.algebra().derived_algebra();
    for (w, _) in spaces {
        for v in derived.basis() {
            let on = |f: &[FieldElement]| {
                f.iter()
                    .zip(v)
                    .fold(FieldElement::zero(), |acc, (a, c)| acc + &(a.clone() * &FieldElement::rational(c.clone())))
            };
            if !on(&w.re).is_zero() || !on(&w.im).is_zero() {
                return Err(Error::Internal("a weight does not vanish on [g, g]".into()));
            }
        }
    }
    Ok(())
}

fn check_conjugation(data: &WeightData) -> Result<()> {
    for s in &data.spaces {
        let j = data
            .position(&s.weight.conj())
            .ok_or_else(|| Error::Internal("weight set is not closed under conjugation".into()))?;
        let conj_space = Subspace::span(s.space.ambient_dim(), s.space.basis().iter().map(|v| conjugate(v)));
        if conj_space != data.spaces[j].space {
            return Err(Error::Internal("conjugation does not exchange conjugate weight spaces".into()));
        }
    }
    Ok(())
}

/// `𝒱̃ = (𝒱 ∩ 𝒱_ℂ^Λ′) ∔ 𝒱_ℂ^Λ″` with the transported representation.
#[derive(Clone, Debug, Serialize)]
pub struct RealForm {
    /// ℝ-basis of `𝒱̃`: real vectors for `Λ′`, then pairs `z, iz` for each `Λ″` basis vector `z`.
    pub basis: Vec<Vec<FieldElement>>,
    /// Matrix of `ι` from the standard basis of `𝒱` to `basis`.
    pub iota: Matrix,
    /// `ρ̃(x_k) = ι ρ(x_k) ι⁻¹` in `basis`.
    pub images: Vec<Matrix>,
}

pub fn real_form(w: &WeightData, r: &RepData) -> Result<RealForm> {
    let n = w.space_dim;
    let mut basis: Vec<Vec<FieldElement>> = Vec::new();
    let zero = vec![FieldElement::zero(); n];
    for s in w.of_class(WeightClass::Real) {
        let re_parts = Subspace::span(n, s.space.basis().iter().map(|v| split_complex(v).0));
        basis.extend(re_parts.basis().iter().map(|u| u.iter().chain(&zero).cloned().collect::<Vec<_>>()));
    }
    for s in w.of_class(WeightClass::Upper) {
        for z in s.complex_basis() {
            let iz = times_i(&z);
            basis.push(z);
            basis.push(iz);
        }
    }
    if basis.len() != n {
        return Err(Error::Internal(format!("real form has dimension {}, expected {n}", basis.len())));
    }
    let t = Matrix::from_columns(2 * n, &basis);
    // ι(v) = Σ_{λ ∈ Λ′ ∪ Λ″} P_λ v, applied to the real vectors (e_j; 0)
    let sum = w
        .spaces
        .iter()
        .filter(|s| s.class != WeightClass::Lower)
        .fold(Matrix::zeros(2 * n, 2 * n), |acc, s| acc.add(&s.projection));
    let iota_vectors = sum.submatrix(0..2 * n, 0..n);
    let iota = t
        .solve_matrix(&iota_vectors)
        .ok_or_else(|| Error::Internal("ι does not land in the real form".into()))?;
    let iota_inv = iota
        .inverse()
        .ok_or_else(|| Error::Internal("ι is not invertible".into()))?;
    let images = r.images().iter().map(|m| iota.mul(m).mul(&iota_inv)).collect();
    Ok(RealForm { basis, iota, images })
}

//! Global classification of the regular set `Γ` by sampling the generic stratum.
//!
//! For sampled `v` with minimal isotropy dimension `k₀`, `Ψ(v)` projects `𝔤` onto
//! `𝔤_ν(v)` along a fixed complement `𝔨`, and `f_j(v) = β_j ∘ Ψ(v)` restricted to
//! `𝔤_ν(v₀)`. The rational dependence pattern of the `f_j(v)` decides the case.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::flag::{jordan_holder_flag, jump_and_complement};
use super::point::{apply_functional, is_regular_point, isotropy_algebra, orbit_map, RepContext};
use crate::error::{Error, Result};
use crate::exactla::{oblique_projector, oblique_projector_mp, Matrix, Subspace};
use crate::exactnum::FieldElement;
use crate::latticetest::{dependence_report, DependenceReport, GeneratorSet};

pub const PRNG_NAME: &str = "chacha8-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sampling {
    pub count: usize,
    pub seed: u64,
    pub coordinate_bound: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            count: 8,
            seed: 0,
            coordinate_bound: 5000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DichotomyCase {
    IntGammaDense,
    ComplementDenseEmptyInterior,
    ComplementDenseDenseInterior,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleEvidence {
    pub point: Vec<FieldElement>,
    pub isotropy_dim: usize,
    /// `Ψ(v)` on the basis of `𝔤_ν(v₀)`, one column per basis vector.
    pub psi_on_base: Matrix,
    /// `f_j(v)` in the basis of `𝔤_ν(v₀)`.
    pub f: Vec<Vec<FieldElement>>,
    pub report: DependenceReport,
    pub regular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SamplingRecord {
    pub count: usize,
    pub seed: u64,
    pub coordinate_bound: i64,
    pub prng: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct DichotomyVerdict {
    pub case: DichotomyCase,
    pub k0: usize,
    pub base_point: Vec<FieldElement>,
    pub base_isotropy: Subspace,
    pub jump_set: Vec<usize>,
    pub complement: Subspace,
    pub sampling: SamplingRecord,
    pub evidence: Vec<SampleEvidence>,
    pub abelian_note: Option<String>,
    /// The complement is only witnessed at the base point; density of its stratum is assumed.
    pub assumption: String,
}

fn draw_batch(ctx: &RepContext, rng: &mut ChaCha8Rng, s: &Sampling) -> Vec<Vec<FieldElement>> {
    let n = ctx.space_dim();
    let blocks = ctx.blocks.blocks.len();
    let mut out = Vec::with_capacity(s.count);
    let mut attempts = 0;
    while out.len() < s.count && attempts < 50 * s.count.max(1) {
        attempts += 1;
        let v: Vec<FieldElement> = (0..n)
            .map(|_| FieldElement::int(rng.gen_range(-s.coordinate_bound..=s.coordinate_bound)))
            .collect();
        // points of X: nonzero in every block
        if ctx.blocks.support(&v).len() == blocks {
            out.push(v);
        }
    }
    out
}

fn lex_cmp(a: &[FieldElement], b: &[FieldElement]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp_exact(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// `Ψ(v)` by the direct construction and by the Moore–Penrose route, required to agree.
fn psi(v: &[FieldElement], ctx: &RepContext, complement: &Subspace) -> Result<Option<Matrix>> {
    let iso = isotropy_algebra(v, &ctx.split);
    let direct = match oblique_projector(&iso, complement) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    let mp = oblique_projector_mp(complement, &orbit_map(v, &ctx.split))?;
    if mp != direct {
        return Err(Error::Internal("direct and Moore-Penrose projections onto the isotropy disagree".into()));
    }
    Ok(Some(direct))
}

pub fn classify_dichotomy(ctx: &RepContext, sampling: &Sampling) -> Result<DichotomyVerdict> {
    if sampling.count == 0 || sampling.coordinate_bound <= 0 {
        return Err(Error::Dimension("sampling needs a positive count and coordinate bound".into()));
    }
    if ctx.space_dim() == 0 {
        return Err(Error::Inconclusive("the space is zero".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let batch = draw_batch(ctx, &mut rng, sampling);
    let check = draw_batch(ctx, &mut rng, sampling);
    if batch.is_empty() {
        return Err(Error::Inconclusive("no sampled point has a nonzero component in every block".into()));
    }
    let dims: Vec<usize> = batch.par_iter().map(|v| isotropy_algebra(v, &ctx.split).dim()).collect();
    let k0 = *dims.iter().min().unwrap();
    let check_min = check.par_iter().map(|v| isotropy_algebra(v, &ctx.split).dim()).min();
    if check_min.is_some_and(|c| c != k0) {
        return Err(Error::Inconclusive(format!(
            "generic isotropy dimension {k0} not confirmed by a second batch ({})",
            check_min.unwrap()
        )));
    }
    let generic: Vec<Vec<FieldElement>> =
        batch.into_iter().zip(&dims).filter(|(_, &d)| d == k0).map(|(v, _)| v).collect();
    let v0 = generic.iter().min_by(|a, b| lex_cmp(a, b)).unwrap().clone();
    let base_iso = isotropy_algebra(&v0, &ctx.split);
    let flag = jordan_holder_flag(ctx.rep.algebra());
    let jumps = jump_and_complement(&base_iso, &flag)?;
    let blocks = &ctx.blocks.blocks;

    let evidence: Vec<SampleEvidence> = generic
        .par_iter()
        .map(|v| -> Result<SampleEvidence> {
            let p = psi(v, ctx, &jumps.complement)?.ok_or_else(|| {
                Error::Inconclusive("a generic sample's isotropy is not complementary to the chosen complement".into())
            })?;
            let on_base: Vec<Vec<FieldElement>> = base_iso.basis().iter().map(|b| p.mul_vec(b)).collect();
            let psi_on_base = Matrix::from_columns(ctx.algebra_dim(), &on_base);
            if psi_on_base.rank() != k0 {
                return Err(Error::Internal("projection onto the isotropy is not injective on the base isotropy".into()));
            }
            let f: Vec<Vec<FieldElement>> = blocks
                .iter()
                .map(|b| on_base.iter().map(|x| apply_functional(&b.beta, x)).collect())
                .collect();
            let report = dependence_report(&GeneratorSet::new(k0, f.clone()));
            let regular = is_regular_point(v, ctx)?.regular;
            if regular != report.discrete {
                return Err(Error::Internal("per-point verdict disagrees with the coefficient functions".into()));
            }
            Ok(SampleEvidence {
                point: v.clone(),
                isotropy_dim: k0,
                psi_on_base,
                f,
                report,
                regular,
            })
        })
        .collect::<Result<_>>()?;

    let pattern = |e: &SampleEvidence| (e.report.basis_indices.clone(), e.report.coefficients.clone());
    let constant = evidence.iter().all(|e| pattern(e) == pattern(&evidence[0]));
    let all_discrete = evidence.iter().all(|e| e.report.discrete);
    let none_discrete = evidence.iter().all(|e| !e.report.discrete);
    let case = if constant && all_discrete {
        DichotomyCase::IntGammaDense
    } else if constant && none_discrete {
        DichotomyCase::ComplementDenseDenseInterior
    } else if !constant && !all_discrete {
        DichotomyCase::ComplementDenseEmptyInterior
    } else {
        return Err(Error::Inconclusive(
            "coefficient functions vary between samples but every sample is regular".into(),
        ));
    };
    let abelian_note = ctx.rep.algebra().is_abelian().then(|| {
        if case == DichotomyCase::IntGammaDense {
            "abelian group: the transformation-group C*-algebra is not antiliminary".to_string()
        } else {
            "abelian group: the transformation-group C*-algebra is antiliminary".to_string()
        }
    });
    Ok(DichotomyVerdict {
        case,
        k0,
        base_point: v0,
        base_isotropy: base_iso,
        jump_set: jumps.jump_set,
        complement: jumps.complement,
        sampling: SamplingRecord {
            count: sampling.count,
            seed: sampling.seed,
            coordinate_bound: sampling.coordinate_bound,
            prng: PRNG_NAME,
        },
        evidence,
        abelian_note,
        assumption: "the stratum on which the isotropy is complementary to the chosen complement is assumed dense and open; it is witnessed at the base point and every sample".into(),
    })
}

//! Isotropy algebras and per-point regularity verdicts.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::exactnum::FieldElement;
use crate::latticetest::{dependence_report, DependenceReport, GeneratorSet};
use crate::nilrep::{block_decomposition, nu_split, Block, BlockDecomposition, NuSplit, RepData};

/// A validated representation with its blocks and `E/ν` splitting.
#[derive(Clone, Debug)]
pub struct RepContext {
    pub rep: RepData,
    pub blocks: BlockDecomposition,
    pub split: NuSplit,
}

impl RepContext {
    pub fn new(rep: RepData, supplied: Option<Vec<Block>>) -> Result<Self> {
        let blocks = block_decomposition(&rep, supplied)?;
        let split = nu_split(&rep, &blocks)?;
        Ok(RepContext { rep, blocks, split })
    }

    pub fn algebra_dim(&self) -> usize {
        self.rep.algebra().dim()
    }

    pub fn space_dim(&self) -> usize {
        self.rep.space_dim()
    }
}

/// The `n × d` matrix with columns `dν(x_k) v`; its kernel is `𝔤_ν(v)`.
pub fn orbit_map(v: &[FieldElement], split: &NuSplit) -> Matrix {
    let cols: Vec<Vec<FieldElement>> = split.dnu.iter().map(|m| m.mul_vec(v)).collect();
    Matrix::from_columns(v.len(), &cols)
}

/// `𝔤_ν(v) = {x : dν(x) v = 0}`.
pub fn isotropy_algebra(v: &[FieldElement], split: &NuSplit) -> Subspace {
    Subspace::kernel(&orbit_map(v, split)).canonical()
}

/// `β(x)` for a functional given on the basis.
pub fn apply_functional(f: &[FieldElement], x: &[FieldElement]) -> FieldElement {
    f.iter()
        .zip(x)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(FieldElement::zero(), |acc, (a, b)| acc + &(a.clone() * b))
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityVerdict {
    pub point: Vec<FieldElement>,
    pub regular: bool,
    /// 1-based block indices.
    pub support: Vec<usize>,
    pub isotropy: Subspace,
    /// `β_j` restricted to the isotropy basis, one generator per `j ∈ supp v`.
    pub restricted_betas: Vec<Vec<FieldElement>>,
    pub report: DependenceReport,
}

/// `π(G)v` is locally compact iff `⟨β_j|_{𝔤_ν(v)} : j ∈ supp v⟩` is discrete.
pub fn is_regular_point(v: &[FieldElement], ctx: &RepContext) -> Result<RegularityVerdict> {
    if v.len() != ctx.space_dim() {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, expected {}",
            v.len(),
            ctx.space_dim()
        )));
    }
    if v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let support = ctx.blocks.support(v);
    let isotropy = isotropy_algebra(v, &ctx.split);
    let restricted_betas: Vec<Vec<FieldElement>> = support
        .iter()
        .map(|&j| {
            let beta = &ctx.blocks.blocks[j - 1].beta;
            isotropy.basis().iter().map(|b| apply_functional(beta, b)).collect()
        })
        .collect();
    let report = dependence_report(&GeneratorSet::new(isotropy.dim(), restricted_betas.clone()));
    Ok(RegularityVerdict {
        point: v.to_vec(),
        regular: report.discrete,
        support,
        isotropy,
        restricted_betas,
        report,
    })
}

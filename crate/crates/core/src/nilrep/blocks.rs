//! Decomposition `𝒱 = 𝒱_1 ∔ … ∔ 𝒱_r` into invariant blocks with characters
//! `α_j + iβ_j`, and the splitting `dπ = dE + dν`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::rep::RepData;
use super::weights::{weight_decomposition, WeightClass};
use crate::error::{Error, Result};
use crate::exactla::eigen::{conjugate, realify_shifted, split_complex};
use crate::exactla::{oblique_projector, Matrix, Subspace};
use crate::exactnum::FieldElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockField {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Block {
    pub space: Subspace,
    pub field: BlockField,
    /// Bound on the nilpotency order of `dπ(x)|_{𝒱_j} − (α_j + iβ_j)(x)`.
    pub m: usize,
    pub alpha: Vec<FieldElement>,
    pub beta: Vec<FieldElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// Complex structure of each ℂ-block in the coordinates of its basis.
    #[serde(skip)]
    structures: Vec<Option<Matrix>>,
    #[serde(skip)]
    change: Matrix,
    #[serde(skip)]
    change_inv: Matrix,
}

impl BlockDecomposition {
    pub fn space_dim(&self) -> usize {
        self.change.rows()
    }

    /// `J_j` acting on the basis coordinates of a ℂ-block.
    pub fn complex_structure(&self, j: usize) -> Option<&Matrix> {
        self.structures[j].as_ref()
    }

    /// Coordinates of the component of `v` in each block, relative to the block basis.
    pub fn components(&self, v: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        let c = self.change_inv.mul_vec(v);
        let mut offset = 0;
        self.blocks
            .iter()
            .map(|b| {
                let k = b.space.dim();
                offset += k;
                c[offset - k..offset].to_vec()
            })
            .collect()
    }

    /// `supp v`: 1-based indices of the blocks where `v` has a nonzero component.
    pub fn support(&self, v: &[FieldElement]) -> Vec<usize> {
        self.components(v)
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().any(|x| !x.is_zero()))
            .map(|(j, _)| j + 1)
            .collect()
    }
}

pub fn support(v: &[FieldElement], b: &BlockDecomposition) -> Vec<usize> {
    b.support(v)
}

/// Validates `supplied` blocks, or derives them from the weight decomposition: one
/// ℝ-block per weight in `Λ′` and one ℂ-block per weight in `Λ″`.
pub fn block_decomposition(r: &RepData, supplied: Option<Vec<Block>>) -> Result<BlockDecomposition> {
    let blocks = match supplied {
        Some(b) => b,
        None => derive_blocks(r)?,
    };
    validate_blocks(r, blocks)
}

fn derive_blocks(r: &RepData) -> Result<Vec<Block>> {
    let n = r.space_dim();
    let d = r.algebra().dim();
    let w = weight_decomposition(r)?;
    Ok(w.spaces
        .iter()
        .filter(|s| s.class != WeightClass::Lower)
        .map(|s| {
            let space = Subspace::span(n, s.space.basis().iter().map(|v| split_complex(v).0)).canonical();
            let (field, beta) = match s.class {
                WeightClass::Real => (BlockField::Real, vec![FieldElement::zero(); d]),
                _ => (BlockField::Complex, s.weight.im.clone()),
            };
            Block {
                m: space.dim(),
                space,
                field,
                alpha: s.weight.re.clone(),
                beta,
            }
        })
        .collect())
}

fn invalid(j: usize, what: &str) -> Error {
    Error::InvalidBlocks(format!("block {}: {what}", j + 1))
}

fn validate_blocks(r: &RepData, blocks: Vec<Block>) -> Result<BlockDecomposition> {
    let n = r.space_dim();
    let d = r.algebra().dim();
    let derived = r.algebra().derived_algebra();
    for (j, b) in blocks.iter().enumerate() {
        if b.space.ambient_dim() != n || b.alpha.len() != d || b.beta.len() != d {
            return Err(Error::Dimension(format!("block {} has inconsistent dimensions", j + 1)));
        }
        if b.space.is_zero() {
            return Err(invalid(j, "subspace is zero"));
        }
        if b.m == 0 {
            return Err(invalid(j, "nilpotency bound m must be positive"));
        }
        let beta_zero = b.beta.iter().all(|x| x.is_zero());
        match b.field {
            BlockField::Real if !beta_zero => return Err(invalid(j, "an R-block needs beta = 0")),
            BlockField::Complex if beta_zero => return Err(invalid(j, "a C-block needs beta != 0")),
            BlockField::Complex if b.space.dim() % 2 != 0 => {
                return Err(invalid(j, "a C-block must have even real dimension"))
            }
            _ => {}
        }
        for v in derived.basis() {
            let on = |f: &[FieldElement]| {
                f.iter()
                    .zip(v)
                    .fold(FieldElement::zero(), |acc, (a, c)| acc + &(a.clone() * &FieldElement::rational(c.clone())))
            };
            if !on(&b.alpha).is_zero() || !on(&b.beta).is_zero() {
                return Err(invalid(j, "alpha and beta must vanish on [g, g]"));
            }
        }
    }
    let parts: Vec<&Subspace> = blocks.iter().map(|b| &b.space).collect();
    if !Subspace::is_direct_sum_decomposition(&parts, n) {
        return Err(Error::InvalidBlocks("blocks do not form a direct sum decomposition of the space".into()));
    }
    let mut structures = Vec::with_capacity(blocks.len());
    for (j, b) in blocks.iter().enumerate() {
        let basis = b.space.basis_matrix();
        let mut restricted = Vec::with_capacity(d);
        for (k, img) in r.images().iter().enumerate() {
            if !b.space.is_invariant_under(img) {
                return Err(invalid(j, &format!("subspace is not invariant under x{}", k + 1)));
            }
            restricted.push(basis.solve_matrix(&img.mul(&basis)).expect("invariant subspace"));
        }
        structures.push(match b.field {
            BlockField::Real => {
                for (k, a) in restricted.iter().enumerate() {
                    if !a.shift_diag(&b.alpha[k]).pow(b.m).is_zero() {
                        return Err(invalid(j, &format!("x{} minus its character is not nilpotent of order m", k + 1)));
                    }
                }
                None
            }
            BlockField::Complex => Some(complex_structure(j, b, &restricted)?),
        });
    }
    let all: Vec<Vec<FieldElement>> = blocks.iter().flat_map(|b| b.space.basis().to_vec()).collect();
    let change = Matrix::from_columns(n, &all);
    let change_inv = change.inverse().ok_or_else(|| Error::Internal("block bases are dependent".into()))?;
    Ok(BlockDecomposition {
        blocks,
        structures,
        change,
        change_inv,
    })
}

/// The joint space `W = ⋂_k Ker_ℂ (A_k − (α_k + iβ_k))^m` must have half the real
/// dimension; `J` is then `i` on `W` and `−i` on `W̄`.
fn complex_structure(j: usize, b: &Block, restricted: &[Matrix]) -> Result<Matrix> {
    let dj = b.space.dim();
    let mut w = Subspace::full(2 * dj);
    for (k, a) in restricted.iter().enumerate() {
        w = w.intersect(&Subspace::kernel(&realify_shifted(a, &b.alpha[k], &b.beta[k]).pow(b.m)));
    }
    if w.dim() != dj {
        return Err(invalid(
            j,
            "the character alpha + i beta does not have a generalized eigenspace of half dimension",
        ));
    }
    let w_bar = Subspace::span(2 * dj, w.basis().iter().map(|v| conjugate(v)));
    let p = oblique_projector(&w, &w_bar).map_err(|_| invalid(j, "eigenspace meets its conjugate"))?;
    let jm = p.submatrix(dj..2 * dj, 0..dj).scale(&FieldElement::int(-2));
    debug_assert_eq!(jm.mul(&jm), Matrix::scalar(dj, FieldElement::int(-1)));
    Ok(jm)
}

#[derive(Clone, Debug, Serialize)]
pub struct NuSplit {
    #[serde(rename = "dE")]
    pub de: Vec<Matrix>,
    #[serde(rename = "dnu")]
    pub dnu: Vec<Matrix>,
}

/// `dE(x) = Σ_j (α_j(x) + β_j(x) J_j)` on the blocks and `dν = dπ − dE`.
pub fn nu_split(r: &RepData, b: &BlockDecomposition) -> Result<NuSplit> {
    let n = r.space_dim();
    let mut de = Vec::with_capacity(r.images().len());
    for k in 0..r.images().len() {
        let mut diag = Matrix::zeros(n, n);
        let mut offset = 0;
        for (j, blk) in b.blocks.iter().enumerate() {
            let dj = blk.space.dim();
            let mut local = Matrix::scalar(dj, blk.alpha[k].clone());
            if let Some(jm) = &b.structures[j] {
                local = local.add(&jm.scale(&blk.beta[k]));
            }
            for a in 0..dj {
                for c in 0..dj {
                    diag.set(offset + a, offset + c, local.get(a, c).clone());
                }
            }
            offset += dj;
        }
        de.push(b.change.mul(&diag).mul(&b.change_inv));
    }
    let dnu: Vec<Matrix> = r.images().iter().zip(&de).map(|(p, e)| p.sub(e)).collect();
    for (k, v) in dnu.iter().enumerate() {
        if !v.is_nilpotent() {
            return Err(Error::InvalidSplit(format!("dnu(x{}) is not nilpotent", k + 1)));
        }
    }
    for (i, e) in de.iter().enumerate() {
        for j in 0..de.len() {
            if !e.commutator(&r.images()[j]).is_zero() || !e.commutator(&dnu[j]).is_zero() {
                return Err(Error::InvalidSplit(format!(
                    "dE(x{}) does not commute with dpi(x{}) and dnu(x{})",
                    i + 1,
                    j + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(NuSplit { de, dnu })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RealAlgebraicField;
    use crate::nilrep::algebra::NilpotentLieAlgebra;

    fn fe(x: i64) -> FieldElement {
        FieldElement::int(x)
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| fe(v)).collect()).collect())
    }

    fn line(image: Matrix) -> RepData {
        let n = image.rows();
        RepData::new(NilpotentLieAlgebra::abelian(1), n, vec![image], None).unwrap()
    }

    #[test]
    fn irrational_pair_gives_two_complex_blocks() {
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let a = k.generator();
        let mut g = Matrix::zeros(4, 4);
        g.set(0, 1, fe(-1));
        g.set(1, 0, fe(1));
        g.set(2, 3, -a.clone());
        g.set(3, 2, a.clone());
        let r = RepData::new(NilpotentLieAlgebra::abelian(1), 4, vec![g.clone()], Some(k)).unwrap();
        let b = block_decomposition(&r, None).unwrap();
        assert_eq!(b.blocks.len(), 2);
        assert!(b.blocks.iter().all(|x| x.field == BlockField::Complex && x.alpha == vec![fe(0)]));
        assert_eq!(b.blocks[0].beta, vec![fe(1)]);
        assert_eq!(b.blocks[1].beta, vec![a]);
        let s = nu_split(&r, &b).unwrap();
        assert_eq!(s.de[0], g);
        assert!(s.dnu[0].is_zero());
        assert_eq!(b.support(&[fe(1), fe(0), fe(0), fe(0)]), vec![1]);
        assert_eq!(b.support(&[fe(1), fe(0), fe(1), fe(0)]), vec![1, 2]);
        assert!(b.support(&vec![fe(0); 4]).is_empty());
        let again = block_decomposition(&r, Some(b.blocks.clone())).unwrap();
        assert_eq!(again.blocks, b.blocks);
    }

    #[test]
    fn diagonal_gives_real_blocks() {
        let r = line(m(&[&[1, 0], &[0, 2]]));
        let b = block_decomposition(&r, None).unwrap();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!((b.blocks[0].alpha.clone(), b.blocks[1].alpha.clone()), (vec![fe(1)], vec![fe(2)]));
        assert!(b.blocks.iter().all(|x| x.field == BlockField::Real && x.beta == vec![fe(0)]));
    }

    #[test]
    fn unipotent_rep_is_one_block() {
        let r = RepData::adjoint(NilpotentLieAlgebra::heisenberg());
        let b = block_decomposition(&r, None).unwrap();
        assert_eq!(b.blocks.len(), 1);
        assert_eq!(b.blocks[0].m, 3);
        let s = nu_split(&r, &b).unwrap();
        assert!(s.de.iter().all(|e| e.is_zero()));
        assert_eq!(s.dnu, r.images().to_vec());
    }

    #[test]
    fn complex_jordan_block_splits() {
        let g = m(&[&[0, -1, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let r = line(g.clone());
        let b = block_decomposition(&r, None).unwrap();
        assert_eq!(b.blocks.len(), 1);
        let s = nu_split(&r, &b).unwrap();
        let rot = m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        assert_eq!(s.de[0], rot);
        assert_eq!(s.dnu[0], g.sub(&rot));
    }

    #[test]
    fn supplied_blocks_are_checked() {
        let r = line(m(&[&[1, 0], &[0, 2]]));
        let e = |i: usize| Subspace::span(2, [crate::exactla::matrix::unit::<FieldElement>(2, i)]);
        let good = vec![
            Block { space: e(0), field: BlockField::Real, m: 1, alpha: vec![fe(1)], beta: vec![fe(0)] },
            Block { space: e(1), field: BlockField::Real, m: 1, alpha: vec![fe(2)], beta: vec![fe(0)] },
        ];
        assert!(block_decomposition(&r, Some(good.clone())).is_ok());
        let mut wrong_alpha = good.clone();
        wrong_alpha[1].alpha = vec![fe(3)];
        assert!(matches!(block_decomposition(&r, Some(wrong_alpha)), Err(Error::InvalidBlocks(_))));
        let overlap = vec![good[0].clone(), good[0].clone()];
        assert!(matches!(block_decomposition(&r, Some(overlap)), Err(Error::InvalidBlocks(_))));
        let not_invariant = vec![
            Block { space: Subspace::span(2, [vec![fe(1), fe(1)]]), ..good[0].clone() },
            good[1].clone(),
        ];
        assert!(block_decomposition(&r, Some(not_invariant)).is_err());
    }
}

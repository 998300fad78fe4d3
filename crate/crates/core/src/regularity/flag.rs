//! Jordan–Hölder flags of ideals and the jump-index complement of a subalgebra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::exactnum::FieldElement;
use crate::nilrep::NilpotentLieAlgebra;

/// `{0} = 𝔉_0 ⊂ 𝔉_1 ⊂ … ⊂ 𝔉_m = 𝔤` with `dim 𝔉_j = j`, each an ideal.
#[derive(Clone, Debug, Serialize)]
pub struct Flag {
    pub ideals: Vec<Subspace>,
    /// `steps[j − 1] ∈ 𝔉_j \ 𝔉_{j−1}`.
    pub steps: Vec<Vec<FieldElement>>,
}

impl Flag {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Refines the lower central series from the bottom up. Each gap `𝔤^(k+1) ⊂ 𝔤^k` is
/// filled with canonical basis vectors of `𝔤^k`, taken from the last one backwards.
pub fn jordan_holder_flag(g: &NilpotentLieAlgebra) -> Flag {
    let n = g.dim();
    let to_fe = |s: &Subspace<crate::exactnum::Rational>| s.map_scalars(|x| FieldElement::rational(x.clone()));
    let lcs: Vec<Subspace> = g.lower_central_series().iter().map(to_fe).collect();
    let mut current = Subspace::zero(n);
    let mut ideals = vec![current.clone()];
    let mut steps = Vec::with_capacity(n);
    for level in lcs.iter().rev().skip(1) {
        for v in level.canonical().basis().iter().rev() {
            if !current.contains(v) {
                current = current.sum(&Subspace::span(n, [v.clone()]));
                ideals.push(current.clone());
                steps.push(v.clone());
            }
        }
    }
    debug_assert_eq!(steps.len(), n);
    Flag { ideals, steps }
}

#[derive(Clone, Debug, Serialize)]
pub struct JumpData {
    /// 1-based indices `j` with `𝔉_{j−1} + 𝔥 ⊊ 𝔉_j + 𝔥`.
    pub jump_set: Vec<usize>,
    /// `𝔨 = span{x_j : j ∈ jump_set}`, basis in jump order.
    pub complement: Subspace,
}

/// Jump indices of `h` along `flag` and the complement spanned by the matching step
/// vectors. The direct sum `𝔤 = 𝔥 ∔ 𝔨` and `𝔉_j = (𝔥 ∩ 𝔉_j) ∔ (𝔨 ∩ 𝔉_j)` are checked.
pub fn jump_and_complement(h: &Subspace, flag: &Flag) -> Result<JumpData> {
    let n = flag.len();
    let mut jump_set = Vec::new();
    let mut prev = h.dim();
    for j in 1..=n {
        let d = flag.ideals[j].sum(h).dim();
        if d > prev {
            jump_set.push(j);
        }
        prev = d;
    }
    let complement = Subspace::from_basis(n, jump_set.iter().map(|&j| flag.steps[j - 1].clone()).collect())
        .map_err(|_| Error::Internal("jump step vectors are dependent".into()))?;
    if !Subspace::is_direct_sum_decomposition(&[h, &complement], n) {
        return Err(Error::Internal("subalgebra and jump complement do not form a direct sum".into()));
    }
    for j in 0..=n {
        let f = &flag.ideals[j];
        if h.intersect(f).dim() + complement.intersect(f).dim() != j {
            return Err(Error::Internal(format!("flag level {j} does not split along the complement")));
        }
    }
    Ok(JumpData { jump_set, complement })
}

//! Discreteness of finitely generated additive subgroups of K^n ⊂ ℝ^n.
//!
//! `⟨v_1, …, v_q⟩` is discrete iff `dim_ℝ span_ℝ = dim_ℚ span_ℚ`. The real rank is the
//! rank over the field (rank does not change under field extension) and the rational
//! rank is the rank of the coordinate expansion in ℚ^(d·n).

use serde::Serialize;

use crate::exactla::Matrix;
use crate::exactnum::field::common_field;
use crate::exactnum::{FieldElement, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<FieldElement>>,
}

impl GeneratorSet {
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<FieldElement>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "generator length does not match ambient dimension"
        );
        GeneratorSet { ambient_dim, vectors }
    }

    /// One-dimensional generators.
    pub fn scalars(values: &[FieldElement]) -> Self {
        Self::new(1, values.iter().map(|v| vec![v.clone()]).collect())
    }
}

/// Rational dependence data of a generator set.
///
/// `basis_indices` are 0-based positions of the generators forming an ℝ-basis of the
/// span; `coefficients[i][j]` expresses generator `remaining_indices[i]` in terms of
/// generator `basis_indices[j]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DependenceReport {
    pub real_rank: usize,
    pub rational_rank: usize,
    pub discrete: bool,
    pub basis_indices: Vec<usize>,
    pub remaining_indices: Vec<usize>,
    pub coefficients: Vec<Vec<FieldElement>>,
    pub all_rational: bool,
}

/// Rank over ℚ of the expanded coordinate vectors.
pub fn rational_rank(vectors: &[Vec<FieldElement>]) -> usize {
    let d = common_field(vectors.iter().flatten()).map_or(1, |f| f.degree());
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| v.iter().flat_map(|e| e.coords_padded(d)).collect())
        .collect();
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

pub fn dependence_report(g: &GeneratorSet) -> DependenceReport {
    let n = g.ambient_dim;
    let mut basis_indices = Vec::new();
    let mut remaining_indices = Vec::new();
    let mut basis: Vec<Vec<FieldElement>> = Vec::new();
    for (i, v) in g.vectors.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if Matrix::from_columns(n, &trial).rank() == trial.len() {
            basis = trial;
            basis_indices.push(i);
        } else {
            remaining_indices.push(i);
        }
    }
    let real_rank = basis.len();
    let coefficients: Vec<Vec<FieldElement>> = if basis.is_empty() {
        remaining_indices.iter().map(|_| Vec::new()).collect()
    } else {
        let b = Matrix::from_columns(n, &basis);
        remaining_indices
            .iter()
            .map(|&i| b.solve(&g.vectors[i]).expect("dependent generator lies in the span"))
            .collect()
    };
    let all_rational = coefficients.iter().flatten().all(|a| a.is_rational());
    let rational_rank = rational_rank(&g.vectors);
    DependenceReport {
        real_rank,
        rational_rank,
        discrete: real_rank == rational_rank,
        basis_indices,
        remaining_indices,
        coefficients,
        all_rational,
    }
}

/// Whether the subgroup of ℝ generated by `thetas` is closed, i.e. `dim_ℚ span_ℚ ≤ 1`.
pub fn scalar_set_closed(thetas: &[FieldElement]) -> bool {
    let rows: Vec<Vec<FieldElement>> = thetas.iter().map(|t| vec![t.clone()]).collect();
    rational_rank(&rows) <= 1
}

//! Finite-dimensional representations `dρ: 𝔤 → End(𝒱)` given on a basis.

use std::sync::Arc;

use num_traits::Zero;

use super::algebra::NilpotentLieAlgebra;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::exactnum::{FieldElement, RealAlgebraicField};

#[derive(Clone, Debug)]
pub struct RepData {
    algebra: NilpotentLieAlgebra,
    space_dim: usize,
    images: Vec<Matrix>,
    field: Option<Arc<RealAlgebraicField>>,
}

impl RepData {
    /// Validated representation; `images[i] = dρ(x_i)`.
    pub fn new(
        algebra: NilpotentLieAlgebra,
        space_dim: usize,
        images: Vec<Matrix>,
        field: Option<Arc<RealAlgebraicField>>,
    ) -> Result<Self> {
        let r = RepData {
            algebra,
            space_dim,
            images,
            field,
        };
        validate_representation(&r)?;
        Ok(r)
    }

    /// The adjoint representation `x ↦ ad x` on 𝔤 itself.
    pub fn adjoint(algebra: NilpotentLieAlgebra) -> Self {
        let n = algebra.dim();
        let images = (0..n)
            .map(|i| algebra.ad(i).map(|c| FieldElement::rational(c.clone())))
            .collect();
        RepData::new(algebra, n, images, None).expect("adjoint representation satisfies Jacobi")
    }

    pub fn algebra(&self) -> &NilpotentLieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn field(&self) -> Option<&Arc<RealAlgebraicField>> {
        self.field.as_ref()
    }

    /// `dρ(Σ x_i e_i)`.
    pub fn image_of(&self, x: &[FieldElement]) -> Matrix {
        let n = self.space_dim;
        x.iter()
            .zip(&self.images)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
    }
}

/// Checks shapes, the single-field convention and `dρ([x_i, x_j]) = [dρ(x_i), dρ(x_j)]`.
pub fn validate_representation(r: &RepData) -> Result<()> {
    let d = r.algebra.dim();
    let n = r.space_dim;
    if r.images.len() != d {
        return Err(Error::Dimension(format!(
            "{} representation matrices given for an algebra of dimension {d}",
            r.images.len()
        )));
    }
    for (i, m) in r.images.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!(
                "image of x{} is {}×{}, expected {n}×{n}",
                i + 1,
                m.rows(),
                m.cols()
            )));
        }
        for e in m.data() {
            if let Some(f) = e.field() {
                if r.field.as_ref() != Some(f) {
                    return Err(Error::FieldMismatch);
                }
            }
        }
    }
    let c = r.algebra.structure_constants();
    for i in 0..d {
        for j in i + 1..d {
            let lhs = (0..d)
                .filter(|&k| !c[i][j][k].is_zero())
                .fold(Matrix::zeros(n, n), |acc, k| {
                    acc.add(&r.images[k].scale(&FieldElement::rational(c[i][j][k].clone())))
                });
            if lhs != r.images[i].commutator(&r.images[j]) {
                return Err(Error::NotARepresentation { i, j });
            }
        }
    }
    Ok(())
}

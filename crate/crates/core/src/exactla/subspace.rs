//! Linear subspaces of K^n given by independent spanning vectors.

use super::matrix::{vec_is_zero, Matrix};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Scalar};

#[derive(Clone, Debug)]
pub struct Subspace<F = FieldElement> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Scalar + serde::Serialize> serde::Serialize for Subspace<F> {
    /// A list of basis column vectors.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

impl<F: Scalar> PartialEq for Subspace<F> {
    /// Equality as subspaces, independent of the chosen bases.
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_subspace(other)
    }
}

impl<F: Scalar> Subspace<F> {
    /// The span of `vectors`, keeping the first maximal independent subset in order.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut s = Subspace {
            ambient,
            basis: Vec::new(),
        };
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
            if !vec_is_zero(&v) && !s.contains(&v) {
                s.basis.push(v);
            }
        }
        s
    }

    /// Uses `basis` as given; fails if it is dependent.
    pub fn from_basis(ambient: usize, basis: Vec<Vec<F>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::Dimension("basis vector length does not match ambient dimension".into()));
        }
        let s = Subspace { ambient, basis };
        if s.basis_matrix().rank() != s.basis.len() {
            return Err(Error::Dimension("basis vectors are linearly dependent".into()));
        }
        Ok(s)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| super::matrix::unit(ambient, i)).collect(),
        }
    }

    /// Null space of `m`.
    pub fn kernel(m: &Matrix<F>) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.kernel_vectors(),
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::span(m.rows(), m.columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<F>> {
        self.basis
    }

    /// `ambient × dim` matrix with the basis as columns.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        if self.basis.is_empty() {
            return vec_is_zero(v);
        }
        self.basis_matrix().solve(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if self.basis.is_empty() {
            return vec_is_zero(v).then(Vec::new);
        }
        self.basis_matrix().solve(v)
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // x = B1·a = B2·b  ⇔  [B1 | −B2]·(a; b) = 0
        let b1 = self.basis_matrix();
        let b2 = other.basis_matrix();
        let stacked = b1.hstack(&b2.neg());
        let k = self.dim();
        let vecs = stacked
            .kernel_vectors()
            .into_iter()
            .map(|ab| b1.mul_vec(&ab[..k]));
        Self::span(self.ambient, vecs)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &Matrix<F>) -> Self {
        Self::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Whether the subspaces are independent and together span the ambient space.
    pub fn is_direct_sum_decomposition(parts: &[&Self], ambient: usize) -> bool {
        let total: usize = parts.iter().map(|p| p.dim()).sum();
        if total != ambient {
            return false;
        }
        let all: Vec<Vec<F>> = parts.iter().flat_map(|p| p.basis.iter().cloned()).collect();
        Matrix::from_columns(ambient, &all).rank() == ambient
    }

    /// Canonical basis from the reduced row echelon form of the spanning rows.
    pub fn canonical(&self) -> Self {
        if self.basis.is_empty() {
            return self.clone();
        }
        let r = Matrix::from_rows(self.basis.clone()).rref();
        Subspace {
            ambient: self.ambient,
            basis: r.matrix.to_rows().into_iter().take(r.pivots.len()).collect(),
        }
    }

    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        Subspace {
            ambient: self.ambient,
            basis: self.basis.iter().map(|v| v.iter().map(&f).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rational};

    fn v(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 5, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.sum(&b), Subspace::full(3));
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(2, vec![v(&[1, 1]), v(&[2, 2]), v(&[0, 0]), v(&[1, 0])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis()[0], v(&[1, 1]));
        assert!(Subspace::from_basis(2, vec![v(&[1, 1]), v(&[2, 2])]).is_err());
    }

    #[test]
    fn direct_sum_check() {
        let a = Subspace::span(2, vec![v(&[1, 0])]);
        let b = Subspace::span(2, vec![v(&[1, 1])]);
        assert!(Subspace::is_direct_sum_decomposition(&[&a, &b], 2));
        assert!(!Subspace::is_direct_sum_decomposition(&[&a, &a], 2));
    }
}

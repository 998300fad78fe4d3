//! Gram coefficients, Moore–Penrose inverses and projections.
//!
//! For `A: K^n → K^m` the Gram coefficients are defined by
//! `det(1 + t·AAᵀ) = Σ_k γ_k t^k`. With `r` the largest index such that `γ_r ≠ 0`
//! (which equals the rank of `A`):
//!
//! ```text
//! A†      = (1/γ_r) · (Σ_{k<r} (−1)^(r−1−k) γ_k (AᵀA)^(r−1−k)) · Aᵀ
//! P_Ker A = 1 − (1/γ_r) · Σ_{k<r} (−1)^(r−1−k) γ_k (AᵀA)^(r−k)
//! ```

use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// `γ_0, …, γ_m` with `γ_0 = 1` and `γ_m = det(AAᵀ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GramVector<F> {
    pub gamma: Vec<F>,
}

impl<F: Scalar> GramVector<F> {
    /// Largest `r` with `γ_r ≠ 0`.
    pub fn rank(&self) -> usize {
        self.gamma.iter().rposition(|g| !g.is_zero()).unwrap_or(0)
    }
}

pub fn gram_coefficients<F: Scalar>(a: &Matrix<F>) -> GramVector<F> {
    let m = a.rows();
    let aat = a.mul(&a.transpose());
    // det(1 + t·M) = Σ_k e_k(M) t^k and charpoly(M) = Σ_k (−1)^k e_k(M) x^(m−k)
    let p = aat.charpoly();
    let gamma = (0..=m)
        .map(|k| {
            let c = p.coeff(m - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    GramVector { gamma }
}

/// `Σ_{k<r} (−1)^(r−1−k) γ_k X^(r−1−k)` by Horner's rule in `X`.
fn gram_sum<F: Scalar>(g: &GramVector<F>, r: usize, x: &Matrix<F>) -> Matrix<F> {
    let n = x.rows();
    let mut acc = Matrix::zeros(n, n);
    for k in 0..r {
        let c = if (r - 1 - k).is_multiple_of(2) {
            g.gamma[k].clone()
        } else {
            -g.gamma[k].clone()
        };
        acc = acc.mul(x).add(&Matrix::scalar(n, c));
    }
    acc
}

/// Moore–Penrose inverse from the Gram-coefficient formula.
pub fn moore_penrose<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let g = gram_coefficients(a);
    let r = g.rank();
    if r == 0 {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let at = a.transpose();
    let ata = at.mul(a);
    gram_sum(&g, r, &ata).mul(&at).scale(&g.gamma[r].recip())
}

/// Orthogonal projection onto `Ker A` from the Gram-coefficient formula.
pub fn kernel_projector<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let n = a.cols();
    let g = gram_coefficients(a);
    let r = g.rank();
    if r == 0 {
        return Matrix::identity(n);
    }
    let ata = a.transpose().mul(a);
    let s = gram_sum(&g, r, &ata).mul(&ata);
    Matrix::identity(n).sub(&s.scale(&g.gamma[r].recip()))
}

/// Moore–Penrose inverse through a rank factorization `A = C·F` read off the
/// reduced row echelon form: `A† = Fᵀ(FFᵀ)⁻¹(CᵀC)⁻¹Cᵀ`.
pub fn moore_penrose_rank_factorization<F: Scalar>(a: &Matrix<F>) -> Matrix<F> {
    let rref = a.rref();
    let r = rref.pivots.len();
    if r == 0 {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let c = a.select_columns(&rref.pivots);
    let f = rref.matrix.submatrix(0..r, 0..a.cols());
    let ft = f.transpose();
    let ct = c.transpose();
    let ffi = f.mul(&ft).inverse().expect("full row rank factor");
    let cci = ct.mul(&c).inverse().expect("full column rank factor");
    ft.mul(&ffi).mul(&cci).mul(&ct)
}

/// Oblique projection onto `onto` along `along`: the identity on `onto`, zero on `along`.
pub fn oblique_projector<F: Scalar>(onto: &Subspace<F>, along: &Subspace<F>) -> Result<Matrix<F>> {
    let n = onto.ambient_dim();
    if along.ambient_dim() != n {
        return Err(Error::Dimension("subspaces live in different ambient spaces".into()));
    }
    if !Subspace::is_direct_sum_decomposition(&[onto, along], n) {
        return Err(Error::NotDirectSum(format!(
            "dimensions {} + {} in ambient dimension {n} do not form a direct sum",
            onto.dim(),
            along.dim()
        )));
    }
    if n == 0 {
        return Ok(Matrix::zeros(0, 0));
    }
    // E = B · diag(1_onto, 0_along) · B⁻¹ with B = [onto | along]
    let b = onto.basis_matrix().hstack(&along.basis_matrix());
    let binv = b.inverse().expect("direct sum basis is invertible");
    let k = onto.dim();
    Ok(onto.basis_matrix().mul(&binv.submatrix(0..k, 0..n)))
}

/// Orthogonal projection onto a subspace, `B·B†`.
pub fn orthogonal_projector<F: Scalar>(s: &Subspace<F>) -> Matrix<F> {
    let n = s.ambient_dim();
    if s.is_zero() {
        return Matrix::zeros(n, n);
    }
    let b = s.basis_matrix();
    b.mul(&moore_penrose(&b))
}

/// Oblique projection onto `Ker T` along `U₀`, composed from Moore–Penrose inverses:
/// `P_Ker T · ((1 − P_U₀) P_Ker T)† · (1 − P_U₀)`.
pub fn oblique_projector_mp<F: Scalar>(u0: &Subspace<F>, kernel_of: &Matrix<F>) -> Result<Matrix<F>> {
    let n = kernel_of.cols();
    if u0.ambient_dim() != n {
        return Err(Error::Dimension("U0 and the kernel live in different ambient spaces".into()));
    }
    let kernel = Subspace::kernel(kernel_of);
    if !Subspace::is_direct_sum_decomposition(&[&kernel, u0], n) {
        return Err(Error::NotDirectSum(format!(
            "kernel of dimension {} and U0 of dimension {} do not form a direct sum in dimension {n}",
            kernel.dim(),
            u0.dim()
        )));
    }
    let pk = kernel_projector(kernel_of);
    let q = Matrix::identity(n).sub(&orthogonal_projector(u0));
    Ok(pk.mul(&moore_penrose(&q.mul(&pk))).mul(&q))
}

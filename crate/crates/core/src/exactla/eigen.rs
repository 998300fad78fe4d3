//! Complex linear algebra through real 2×2 blocks, and generalized eigenspaces.
//!
//! A complex vector `u + iw ∈ K^n ⊗ ℂ` is encoded as the real vector `(u; w)` of
//! length `2n`, and a complex matrix `A + iB` as `[[A, −B], [B, A]]`.

use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::exactnum::Scalar;

/// Real `2n × 2n` form of the complex matrix `re + i·im`.
pub fn realify<F: Scalar>(re: &Matrix<F>, im: &Matrix<F>) -> Matrix<F> {
    assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
    let top = re.hstack(&im.neg());
    let bottom = im.hstack(re);
    top.vstack(&bottom)
}

/// Real form of `M − (a + ib)·1` for a real matrix `M`.
pub fn realify_shifted<F: Scalar>(m: &Matrix<F>, a: &F, b: &F) -> Matrix<F> {
    let n = m.rows();
    realify(&m.shift_diag(a), &Matrix::scalar(n, -b.clone()))
}

/// Splits an encoded complex vector into real and imaginary parts.
pub fn split_complex<F: Scalar>(v: &[F]) -> (Vec<F>, Vec<F>) {
    let n = v.len() / 2;
    (v[..n].to_vec(), v[n..].to_vec())
}

/// Encodes `u + iw`.
pub fn join_complex<F: Scalar>(u: &[F], w: &[F]) -> Vec<F> {
    u.iter().chain(w).cloned().collect()
}

/// Multiplies an encoded complex vector by `i`: `(u; w) ↦ (−w; u)`.
pub fn times_i<F: Scalar>(v: &[F]) -> Vec<F> {
    let (u, w) = split_complex(v);
    let nw: Vec<F> = w.into_iter().map(|x| -x).collect();
    join_complex(&nw, &u)
}

/// Complex conjugation of an encoded vector: `(u; w) ↦ (u; −w)`.
pub fn conjugate<F: Scalar>(v: &[F]) -> Vec<F> {
    let (u, w) = split_complex(v);
    let nw: Vec<F> = w.into_iter().map(|x| -x).collect();
    join_complex(&u, &nw)
}

/// Real generalized eigenspace of `m` at `λ = re + i·im`.
///
/// For real `λ` this is `Ker (M − λ)^power`. For `im ≠ 0` it is the real span of the
/// real and imaginary parts of `Ker_ℂ (M − λ)^power`, which is the `{λ, λ̄}` part of
/// the real space. `power = None` uses the dimension of the space.
pub fn generalized_eigenspace<F: Scalar>(m: &Matrix<F>, re: &F, im: &F, power: Option<usize>) -> Subspace<F> {
    let n = m.rows();
    assert!(m.is_square(), "generalized_eigenspace needs a square matrix");
    let p = power.unwrap_or(n);
    assert!(p >= 1, "power must be at least 1");
    if im.is_zero() {
        return Subspace::kernel(&m.shift_diag(re).pow(p));
    }
    let r = realify_shifted(m, re, im).pow(p);
    let parts = r.kernel_vectors().into_iter().flat_map(|v| {
        let (u, w) = split_complex(&v);
        [u, w]
    });
    Subspace::span(n, parts)
}

/// Complex generalized eigenspace `Ker_ℂ (M − λ)^power` in the `(u; w)` encoding.
pub fn complex_generalized_eigenspace<F: Scalar>(m: &Matrix<F>, re: &F, im: &F, power: Option<usize>) -> Subspace<F> {
    let p = power.unwrap_or(m.rows()).max(1);
    Subspace::kernel(&realify_shifted(m, re, im).pow(p))
}

//! Exact linear algebra over [`Scalar`](crate::exactnum::Scalar) types.

pub mod eigen;
pub mod matrix;
pub mod projection;
pub mod subspace;

pub use eigen::{generalized_eigenspace, realify};
pub use matrix::Matrix;
pub use projection::{
    gram_coefficients, kernel_projector, moore_penrose, moore_penrose_rank_factorization, oblique_projector,
    oblique_projector_mp, orthogonal_projector, GramVector,
};
pub use subspace::Subspace;

/// Basis of the null space of `m`.
pub fn kernel_basis<F: crate::exactnum::Scalar>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::kernel(m)
}

//! Exact scalars: rationals, polynomials, a real algebraic field ℚ(α), Sturm root
//! isolation and polynomial factorization.

pub mod factor;
pub mod field;
pub mod kfactor;
mod modp;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod sturm;

pub use factor::factor_over_q;
pub use field::{FieldElement, RealAlgebraicField};
pub use kfactor::{complex_roots, factor_over_field, ComplexValue, KPoly};
pub use poly::Poly;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use scalar::{OrderedScalar, Scalar};
pub use sturm::{sturm_real_roots, RootInterval, SturmChain};

/// The rational value of `e`, or `None` if it is irrational.
pub fn element_rational_part(e: &FieldElement) -> Option<Rational> {
    e.rational_part()
}

/// Exact sign of `e` in {−1, 0, 1}.
pub fn element_sign(e: &FieldElement) -> i8 {
    e.sign()
}

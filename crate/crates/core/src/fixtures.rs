//! Representations used by the self-test and the test suites.

use std::sync::Arc;

use crate::error::Result;
use crate::exactla::Matrix;
use crate::exactnum::{FieldElement, RealAlgebraicField};
use crate::nilrep::{NilpotentLieAlgebra, RepData};
use crate::regularity::RepContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    Sqrt2,
    Rational(i64),
}

fn fe(x: i64) -> FieldElement {
    FieldElement::int(x)
}

/// Block diagonal matrix with `c·[[0, −1], [1, 0]]` blocks, padded with zeros to `n`.
fn rotations(n: usize, coeffs: &[FieldElement]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for (b, c) in coeffs.iter().enumerate() {
        m.set(2 * b, 2 * b + 1, -c.clone());
        m.set(2 * b + 1, 2 * b, c.clone());
    }
    m
}

pub fn heisenberg_adjoint() -> RepContext {
    RepContext::new(RepData::adjoint(NilpotentLieAlgebra::heisenberg()), None).expect("adjoint fixture")
}

/// Heisenberg group acting on `ℂ²` through its first coordinate by
/// `(z_1, z_2) ↦ (e^{it} z_1, e^{iθt} z_2)`.
pub fn prop_nonabelian(theta: Theta) -> Result<RepContext> {
    let (t, field) = theta_value(theta)?;
    let x = rotations(4, &[fe(1), t]);
    let rep = RepData::new(NilpotentLieAlgebra::heisenberg(), 4, vec![x, Matrix::zeros(4, 4), Matrix::zeros(4, 4)], field)?;
    RepContext::new(rep, None)
}

fn theta_value(theta: Theta) -> Result<(FieldElement, Option<Arc<RealAlgebraicField>>)> {
    Ok(match theta {
        Theta::Sqrt2 => {
            let k = RealAlgebraicField::sqrt(2)?;
            (k.generator(), Some(k))
        }
        Theta::Rational(q) => (fe(q), None),
    })
}

/// `ℝ` acting on `ℂ²` by `diag(e^{ipt}, e^{iqt})`.
pub fn rotation_pair(p: i64, q: i64) -> Result<RepContext> {
    let rep = RepData::new(NilpotentLieAlgebra::abelian(1), 4, vec![rotations(4, &[fe(p), fe(q)])], None)?;
    RepContext::new(rep, None)
}

/// `ℝ²` acting on `ℂ ⊕ ℂ ⊕ ℝ³`: `x_1` rotates the first plane and `x_2` the second at
/// speed `√2`, while on `ℝ³ = ⟨a, b, c⟩` they act by the nilpotent maps `b ↦ a` and
/// `c ↦ a`. The isotropy at `v` is spanned by `v_c x_1 − v_b x_2`, so the coefficient
/// relating the two restricted `β`'s is `−√2 v_b / v_c` and varies with `v`.
pub fn varying_isotropy() -> Result<RepContext> {
    let k = RealAlgebraicField::sqrt(2)?;
    let mut x1 = rotations(7, &[fe(1)]);
    x1.set(4, 5, fe(1));
    let mut x2 = Matrix::zeros(7, 7);
    x2.set(2, 3, -k.generator());
    x2.set(3, 2, k.generator());
    x2.set(4, 6, fe(1));
    let rep = RepData::new(NilpotentLieAlgebra::abelian(2), 7, vec![x1, x2], Some(k))?;
    RepContext::new(rep, None)
}

/// Problem files bundled for the self-test.
pub mod files {
    pub const HEISENBERG_ADJOINT: &str = include_str!("../fixtures/heisenberg_adjoint.json");
    pub const NONABELIAN: &str = include_str!("../fixtures/nonabelian.json");
    pub const NONABELIAN_RATIONAL: &str = include_str!("../fixtures/nonabelian_rational.json");
    pub const ROTATION_PAIR: &str = include_str!("../fixtures/rotation_pair.json");
    pub const MAUTNER: &str = include_str!("../fixtures/mautner.json");
    pub const MAUTNER_FLOW: &str = include_str!("../fixtures/mautner_flow.json");
    pub const RATIONAL_SPECTRUM: &str = include_str!("../fixtures/rational_spectrum.json");
    pub const MIXED_SPECTRUM: &str = include_str!("../fixtures/mixed_spectrum.json");
    pub const JORDAN_ELLIPTIC: &str = include_str!("../fixtures/jordan_elliptic.json");
    pub const HYPERBOLIC: &str = include_str!("../fixtures/hyperbolic.json");
}

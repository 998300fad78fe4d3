//! Nilpotent Lie algebras given by structure constants.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::exactnum::Rational;

/// `[x_i, x_j] = Σ_k c[i][j][k] x_k`, validated to be antisymmetric, Jacobi and nilpotent.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentLieAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Rational>>>,
    class: usize,
}

impl NilpotentLieAlgebra {
    pub fn new(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        validate_lie_algebra(dim, c)
    }

    /// The abelian algebra ℝ^dim.
    pub fn abelian(dim: usize) -> Self {
        NilpotentLieAlgebra {
            dim,
            c: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
            class: usize::from(dim > 0),
        }
    }

    /// Heisenberg algebra with basis X, Y, Z and `[X, Y] = Z`.
    pub fn heisenberg() -> Self {
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        c[0][1][2] = Rational::from_integer(1.into());
        c[1][0][2] = Rational::from_integer((-1).into());
        Self::new(3, c).expect("Heisenberg algebra is nilpotent")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.c
    }

    /// Nilpotency class: the number of nonzero terms of the lower central series.
    pub fn class(&self) -> usize {
        self.class
    }

    pub fn is_abelian(&self) -> bool {
        self.class <= 1
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bracket(&self.c, x, y)
    }

    /// `ad(x_i)` with column `j` equal to `[x_i, x_j]`.
    pub fn ad(&self, i: usize) -> Matrix<Rational> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c[i][j][k].clone())
    }

    /// `𝔤 = 𝔤¹ ⊇ 𝔤² ⊇ … ⊇ 𝔤^(class+1) = {0}`, including the final zero space.
    pub fn lower_central_series(&self) -> Vec<Subspace<Rational>> {
        lower_central_series(&self.c, self.dim).0
    }

    /// `[𝔤, 𝔤]`.
    pub fn derived_algebra(&self) -> Subspace<Rational> {
        let lcs = self.lower_central_series();
        lcs.get(1).cloned().unwrap_or_else(|| Subspace::zero(self.dim))
    }
}

fn bracket(c: &[Vec<Vec<Rational>>], x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let s = &x[i] * &y[j];
            for k in 0..n {
                if !c[i][j][k].is_zero() {
                    out[k] += &s * &c[i][j][k];
                }
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::exactla::matrix::unit(n, i)
}

/// Series and whether it reached zero.
fn lower_central_series(c: &[Vec<Vec<Rational>>], n: usize) -> (Vec<Subspace<Rational>>, bool) {
    let mut series = vec![Subspace::full(n)];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            return (series, true);
        }
        let next = Subspace::span(
            n,
            (0..n).flat_map(|i| last.basis().iter().map(move |v| bracket(c, &unit(n, i), v))),
        )
        .canonical();
        if next.dim() == last.dim() {
            return (series, false);
        }
        series.push(next);
    }
}

/// Checks antisymmetry, the Jacobi identity and nilpotency.
pub fn validate_lie_algebra(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<NilpotentLieAlgebra> {
    if c.len() != dim || c.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
        return Err(Error::Dimension(format!("structure constants must have shape {dim}×{dim}×{dim}")));
    }
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if c[i][j][k] != -c[j][i][k].clone() {
                    return Err(Error::NotAntisymmetric { i, j, k });
                }
            }
        }
    }
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                let (xi, xj, xk) = (unit(dim, i), unit(dim, j), unit(dim, k));
                let a = bracket(&c, &xi, &bracket(&c, &xj, &xk));
                let b = bracket(&c, &xj, &bracket(&c, &xk, &xi));
                let d = bracket(&c, &xk, &bracket(&c, &xi, &xj));
                if (0..dim).any(|t| !(a[t].clone() + &b[t] + &d[t]).is_zero()) {
                    return Err(Error::Jacobi { i, j, k });
                }
            }
        }
    }
    let (series, nilpotent) = lower_central_series(&c, dim);
    if !nilpotent {
        return Err(Error::NotNilpotent(series.last().unwrap().dim()));
    }
    Ok(NilpotentLieAlgebra {
        dim,
        class: series.len() - 1,
        c,
    })
}

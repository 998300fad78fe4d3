//! Dense row-major matrices over an exact field.

use std::fmt;

use crate::exactnum::{FieldElement, Poly, Rational, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<F = FieldElement> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar + serde::Serialize> serde::Serialize for Matrix<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + &(x.clone() * y))
}

pub fn vec_add<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

pub fn vec_sub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub fn vec_scale<F: Scalar>(a: &[F], c: &F) -> Vec<F> {
    a.iter().map(|x| x.clone() * c).collect()
}

pub fn vec_is_zero<F: Scalar>(a: &[F]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Unit vector `e_i` of length `n`.
pub fn unit<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

/// Row echelon data: reduced matrix and pivot columns.
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![F::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "column length");
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product dimensions");
        let mut out = vec![F::zero(); self.rows * o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out[idx] = out[idx].clone() + &(a.clone() * b);
                }
            }
        }
        Self::new(self.rows, o.cols, out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimensions");
        (0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum dimensions");
        Self::new(self.rows, self.cols, vec_add(&self.data, &o.data))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference dimensions");
        Self::new(self.rows, self.cols, vec_sub(&self.data, &o.data))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.rows, self.cols, vec_scale(&self.data, c))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.rows, self.cols, self.data.iter().map(|x| -x.clone()).collect())
    }

    /// `self − c·I`
    pub fn shift_diag(&self, c: &F) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i).clone() - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows).is_zero()
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Self::new(self.rows + o.rows, self.cols, data)
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    /// Fraction-free elimination. Returns the rank and, for square input, the determinant.
    fn bareiss(&self) -> (usize, F) {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut prev = F::one();
        let mut r = 0;
        let mut negate = false;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                negate = !negate;
            }
            let inv_prev = prev.recip();
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = (a[r][c].clone() * &a[i][j]) - (a[i][c].clone() * &a[r][j]);
                    a[i][j] = v * &inv_prev;
                }
                a[i][c] = F::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        let det = if m == n && r == n {
            if n == 0 {
                F::one()
            } else if negate {
                -a[n - 1][n - 1].clone()
            } else {
                a[n - 1][n - 1].clone()
            }
        } else {
            F::zero()
        };
        (r, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        self.bareiss().1
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][c].recip();
            for j in c..n {
                a[r][j] = a[r][j].clone() * &inv;
            }
            for i in 0..m {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in c..n {
                    let t = f.clone() * &a[r][j];
                    a[i][j] = a[i][j].clone() - &t;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: Self::from_rows(if m == 0 { Vec::new() } else { a }).reshape_cols(n),
            pivots,
        }
    }

    fn reshape_cols(self, n: usize) -> Self {
        if self.rows == 0 {
            Self::zeros(0, n)
        } else {
            self
        }
    }

    /// Basis of the null space from the reduced echelon form: one vector per free
    /// column, with a 1 in that column.
    pub fn kernel_vectors(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); n];
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_columns(self.rows, &[b.to_vec()]));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// One solution `X` of `self · X = B`, if any.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        let cols: Option<Vec<Vec<F>>> = b.columns().iter().map(|c| self.solve(c)).collect();
        cols.map(|c| Matrix::from_columns(self.cols, &c))
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = self.hstack(&Self::identity(n));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(matrix.submatrix(0..n, n..2 * n))
    }

    /// `det(x·I − self)` by the Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> Poly<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut c = vec![F::zero(); n + 1];
        c[n] = F::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&Self::scalar(n, c[n - k + 1].clone()));
            let t = self.mul(&m).trace();
            let kf = F::from_rational(Rational::from_integer((k as i64).into()));
            c[n - k] = -(t * &kf.recip());
        }
        Poly::new(c)
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        let n = self.rows;
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zeros(n, n), |acc, c| self.mul(&acc).add(&Self::scalar(n, c.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Poly};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), rat(-1));
        assert_eq!(m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).det(), rat(18));
        assert_eq!(m(&[&[0, 0, 1], &[0, 0, 2]]).rank(), 1);
        assert_eq!(Matrix::<Rational>::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(m(&[&[1, 1]]).kernel_vectors(), vec![vec![rat(-1), rat(1)]]);
        assert!(Matrix::<Rational>::identity(3).kernel_vectors().is_empty());
        let k = m(&[&[1, 2], &[2, 4]]).kernel_vectors();
        assert_eq!(k, vec![vec![rat(-2), rat(1)]]);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.solve(&[rat(3), rat(2)]).unwrap(), vec![rat(1), rat(1)]);
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[rat(1), rat(2)]).is_none());
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn charpoly_matches_determinant_interpolation() {
        let a = m(&[&[1, 2, 0], &[-1, 0, 3], &[4, 1, 1]]);
        let p = a.charpoly();
        for x in -3..4 {
            let d = Matrix::scalar(3, rat(x)).sub(&a).det();
            assert_eq!(p.eval(&rat(x)), d);
        }
        assert_eq!(a.eval_poly(&p), Matrix::zeros(3, 3));
        let rot = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(rot.charpoly(), Poly::new(vec![rat(1), rat(0), rat(1)]));
    }
}

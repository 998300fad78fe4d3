#![allow(dead_code)]

use std::sync::Arc;

use nilorbit::exactla::Matrix;
use nilorbit::exactnum::{rat, ratio, FieldElement, RealAlgebraicField, Rational};
use nilorbit::nilrep::{NilpotentLieAlgebra, RepData};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Weight = (Vec<FieldElement>, Vec<FieldElement>);

/// A representation built from known blocks and the weights it must have.
pub struct KnownRep {
    pub rep: RepData,
    /// Every weight `(re, im)` including conjugates, without repetition.
    pub weights: Vec<Weight>,
}

pub fn sqrt2() -> Arc<RealAlgebraicField> {
    RealAlgebraicField::sqrt(2).unwrap()
}

pub fn fe(n: i64) -> FieldElement {
    FieldElement::int(n)
}

/// `a + b√2` with small rational `a`, `b`.
pub fn small_element(rng: &mut ChaCha8Rng, k: &Arc<RealAlgebraicField>) -> FieldElement {
    let a = ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    let b = if rng.gen_bool(0.5) { rat(0) } else { ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2)) };
    FieldElement::from_coords(vec![a, b], Some(k.clone()))
}

pub fn heisenberg_plus_line() -> NilpotentLieAlgebra {
    let mut c = vec![vec![vec![rat(0); 4]; 4]; 4];
    c[0][1][2] = rat(1);
    c[1][0][2] = rat(-1);
    NilpotentLieAlgebra::new(4, c).unwrap()
}

fn zero(n: usize) -> Matrix {
    Matrix::zeros(n, n)
}

fn place(m: &mut Matrix, at: usize, block: &Matrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            m.set(at + i, at + j, block.get(i, j).clone());
        }
    }
}

/// Unit lower times unit upper triangular with entries in {−1, 0, 1}.
pub fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let l = Matrix::from_fn(n, n, |i, j| if i == j { rat(1) } else { rat(0) });
    let mut l = l;
    let mut u = Matrix::<Rational>::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i > j {
                l.set(i, j, rat(rng.gen_range(-1..=1)));
            } else if i < j {
                u.set(i, j, rat(rng.gen_range(-1..=1)));
            }
        }
    }
    l.mul(&u)
}

/// Random representation of an abelian algebra, the Heisenberg algebra or Heisenberg ⊕ ℝ on
/// at most `max_dim` dimensions, conjugated by a unimodular matrix. Weights lie in ℚ(√2)(i).
pub fn random_rep(rng: &mut ChaCha8Rng, max_dim: usize) -> KnownRep {
    let k = sqrt2();
    let kind = rng.gen_range(0..3);
    let algebra = match kind {
        0 => NilpotentLieAlgebra::abelian(rng.gen_range(1..=3)),
        1 => NilpotentLieAlgebra::heisenberg(),
        _ => heisenberg_plus_line(),
    };
    let d = algebra.dim();
    // coordinates of 𝔤 on which weights may be nonzero
    let free: Vec<bool> = (0..d).map(|i| kind == 0 || i != 2).collect();
    let mut blocks: Vec<(Vec<Matrix>, Weight)> = Vec::new();
    let mut used = 0;
    while used < max_dim {
        let room = max_dim - used;
        let choice = rng.gen_range(0..4);
        let re: Vec<FieldElement> =
            (0..d).map(|i| if free[i] { small_element(rng, &k) } else { fe(0) }).collect();
        match choice {
            // real block with a commuting shift
            0 | 1 => {
                let s = rng.gen_range(1..=room.min(2));
                let mut shift = zero(s);
                if s == 2 {
                    shift.set(0, 1, fe(1));
                }
                let images = (0..d)
                    .map(|i| {
                        let c = if free[i] { fe(rng.gen_range(-1..=1)) } else { fe(0) };
                        Matrix::scalar(s, re[i].clone()).add(&shift.scale(&c))
                    })
                    .collect();
                blocks.push((images, (re, vec![fe(0); d])));
                used += s;
            }
            // one complex dimension
            2 if room >= 2 => {
                let mut im: Vec<FieldElement> =
                    (0..d).map(|i| if free[i] { small_element(rng, &k) } else { fe(0) }).collect();
                if im.iter().all(|x| x.sign() == 0) {
                    im[0] = fe(1);
                }
                let images = (0..d)
                    .map(|i| {
                        let mut m = Matrix::scalar(2, re[i].clone());
                        m.set(0, 1, -im[i].clone());
                        m.set(1, 0, im[i].clone());
                        m
                    })
                    .collect();
                blocks.push((images, (re, im)));
                used += 2;
            }
            // standard Heisenberg block
            3 if kind != 0 && room >= 3 => {
                let e = |i: usize, j: usize| {
                    let mut m = zero(3);
                    m.set(i, j, fe(1));
                    m
                };
                let images = (0..d)
                    .map(|i| {
                        let s = Matrix::scalar(3, re[i].clone());
                        match i {
                            0 => s.add(&e(0, 1)),
                            1 => s.add(&e(1, 2)),
                            2 => e(0, 2),
                            _ => s,
                        }
                    })
                    .collect();
                blocks.push((images, (re, vec![fe(0); d])));
                used += 3;
            }
            _ => {}
        }
        if used > 0 && rng.gen_bool(0.35) {
            break;
        }
    }
    let n = used;
    let p = unimodular(rng, n).map(|x| FieldElement::rational(x.clone()));
    let pinv = p.inverse().unwrap();
    let images: Vec<Matrix> = (0..d)
        .map(|i| {
            let mut m = zero(n);
            let mut at = 0;
            for (b, _) in &blocks {
                place(&mut m, at, &b[i]);
                at += b[i].rows();
            }
            p.mul(&m).mul(&pinv)
        })
        .collect();
    let mut weights: Vec<Weight> = Vec::new();
    for (_, (re, im)) in &blocks {
        let conj: Vec<FieldElement> = im.iter().map(|x| -x.clone()).collect();
        for w in [(re.clone(), im.clone()), (re.clone(), conj)] {
            if !weights.contains(&w) {
                weights.push(w);
            }
        }
    }
    let rep = RepData::new(algebra, n, images, Some(k)).expect("block construction is a representation");
    KnownRep { rep, weights }
}

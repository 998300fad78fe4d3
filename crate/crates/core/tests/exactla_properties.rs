use std::sync::Arc;

use nilorbit::exactla::eigen::generalized_eigenspace;
use nilorbit::exactla::{
    gram_coefficients, kernel_basis, kernel_projector, moore_penrose, moore_penrose_rank_factorization,
    oblique_projector, oblique_projector_mp, Matrix, Subspace,
};
use nilorbit::exactnum::{complex_roots, rat, ratio, FieldElement, RealAlgebraicField, Rational};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => (-4i64..=4).prop_map(rat),
        1 => (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d)),
        2 => Just(rat(0)),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c).prop_map(move |d| Matrix::new(r, c, d))
    })
}

/// A random invertible matrix: unit lower times unit upper triangular.
fn invertible(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-2i64..=2, 2 * n * n).prop_map(move |v| {
        let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => rat(1),
            std::cmp::Ordering::Greater => rat(v[i * n + j]),
            _ => rat(0),
        });
        let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => rat(1),
            std::cmp::Ordering::Less => rat(v[n * n + i * n + j]),
            _ => rat(0),
        });
        l.mul(&u)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn penrose_equations(a in matrix(6)) {
        let b = moore_penrose(&a);
        prop_assert_eq!(a.mul(&b).mul(&a), a.clone());
        prop_assert_eq!(b.mul(&a).mul(&b), b.clone());
        prop_assert_eq!(a.mul(&b).transpose(), a.mul(&b));
        prop_assert_eq!(b.mul(&a).transpose(), b.mul(&a));
        prop_assert_eq!(moore_penrose_rank_factorization(&a), b);
    }

    #[test]
    fn gram_coefficients_detect_rank(a in matrix(6)) {
        let g = gram_coefficients(&a);
        let r = a.rank();
        prop_assert_eq!(g.gamma.len(), a.rows() + 1);
        prop_assert_eq!(&g.gamma[0], &rat(1));
        prop_assert_ne!(&g.gamma[r], &rat(0));
        prop_assert!(g.gamma[r + 1..].iter().all(|x| *x == rat(0)));
        prop_assert_eq!(g.gamma.last().unwrap(), &a.mul(&a.transpose()).det());
    }

    #[test]
    fn kernel_projector_properties(a in matrix(6)) {
        let p = kernel_projector(&a);
        prop_assert_eq!(p.mul(&p), p.clone());
        prop_assert_eq!(p.transpose(), p.clone());
        prop_assert!(a.mul(&p).is_zero());
        let k = kernel_basis(&a);
        prop_assert_eq!(k.dim(), a.cols() - a.rank());
        prop_assert_eq!(p.rank(), k.dim());
        for v in k.basis() {
            prop_assert_eq!(p.mul_vec(v), v.clone());
        }
    }

    #[test]
    fn oblique_routes_agree(
        (n, k, s, seed) in (1usize..=8).prop_flat_map(|n| (Just(n), 0..=n, invertible(n), any::<u64>()))
    ) {
        // columns of an invertible matrix split into two complementary subspaces
        let cols = s.columns();
        let mut idx: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            idx.swap(i, (state >> 33) as usize % (i + 1));
        }
        let onto = Subspace::span(n, idx[..k].iter().map(|&i| cols[i].clone()));
        let along = Subspace::span(n, idx[k..].iter().map(|&i| cols[i].clone()));
        let e = oblique_projector(&onto, &along).unwrap();
        prop_assert_eq!(e.mul(&e), e.clone());
        for v in onto.basis() {
            prop_assert_eq!(e.mul_vec(v), v.clone());
        }
        for w in along.basis() {
            prop_assert!(e.mul_vec(w).iter().all(|x| *x == rat(0)));
        }
        // Ker T = onto for T whose rows span the orthogonal complement of onto
        let t = if k == n {
            Matrix::zeros(1, n)
        } else {
            let comp = kernel_basis(&onto.basis_matrix().transpose());
            Matrix::from_rows(comp.basis().to_vec())
        };
        prop_assert_eq!(oblique_projector_mp(&along, &t).unwrap(), e);
    }

    #[test]
    fn eigenspaces_fill_the_space_over_q_i(
        blocks in prop::collection::vec((0u8..3, -3i64..=3, 1i64..=3), 1..=3),
        s in invertible(6),
    ) {
        let (j, n) = block_matrix(&blocks, None);
        let s = s.submatrix(0..n, 0..n).map(|x| FieldElement::rational(x.clone()));
        check_eigenspace_sum(&s.mul(&j).mul(&s.inverse().unwrap()), None);
    }

    #[test]
    fn eigenspaces_fill_the_space_over_sqrt2(
        blocks in prop::collection::vec((0u8..4, -3i64..=3, 1i64..=3), 1..=3),
        s in invertible(6),
    ) {
        let f = RealAlgebraicField::sqrt(2).unwrap();
        let (j, n) = block_matrix(&blocks, Some(&f));
        let s = s.submatrix(0..n, 0..n).map(|x| FieldElement::rational(x.clone()));
        check_eigenspace_sum(&s.mul(&j).mul(&s.inverse().unwrap()), Some(&f));
    }
}

/// Block diagonal matrix: kind 0 = real eigenvalue a, kind 1 = a 2×2 Jordan block at a,
/// kind 2 = rotation block a ± bi, kind 3 = real eigenvalue a·√2 ± b·√2 as a 2×2 block.
fn block_matrix(
    blocks: &[(u8, i64, i64)],
    field: Option<&Arc<RealAlgebraicField>>,
) -> (Matrix<FieldElement>, usize) {
    let fe = |x: i64| FieldElement::int(x);
    let mut parts: Vec<Matrix<FieldElement>> = Vec::new();
    for &(kind, a, b) in blocks {
        parts.push(match kind {
            0 => Matrix::from_rows(vec![vec![fe(a)]]),
            1 => Matrix::from_rows(vec![vec![fe(a), fe(1)], vec![fe(0), fe(a)]]),
            2 => Matrix::from_rows(vec![vec![fe(a), fe(-b)], vec![fe(b), fe(a)]]),
            _ => {
                let r = field.unwrap().generator();
                Matrix::from_rows(vec![
                    vec![r.clone() * &fe(a), r.clone() * &fe(b)],
                    vec![r.clone() * &fe(b), r * &fe(a)],
                ])
            }
        });
    }
    let n: usize = parts.iter().map(|p| p.rows()).sum();
    let mut m = Matrix::zeros(n, n);
    let mut off = 0;
    for p in parts {
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                m.set(off + i, off + j, p.get(i, j).clone());
            }
        }
        off += p.rows();
    }
    (m, n)
}

fn check_eigenspace_sum(m: &Matrix<FieldElement>, field: Option<&Arc<RealAlgebraicField>>) {
    let n = m.rows();
    let roots = complex_roots(&m.charpoly(), field).unwrap();
    let mut total = 0;
    let mut seen: Vec<(FieldElement, FieldElement)> = Vec::new();
    for (z, mult) in roots {
        if z.im.sign() < 0 || seen.contains(&(z.re.clone(), z.im.clone())) {
            continue;
        }
        seen.push((z.re.clone(), z.im.clone()));
        let e = generalized_eigenspace(m, &z.re, &z.im, None);
        let expected = if z.is_real() { mult } else { 2 * mult };
        assert_eq!(e.dim(), expected);
        assert!(e.is_invariant_under(m));
        total += e.dim();
    }
    assert_eq!(total, n);
}

#[test]
fn documented_examples() {
    let m = |rows: &[&[i64]]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect());
    let k = kernel_basis(&m(&[&[1, 1]]));
    assert_eq!(k.dim(), 1);
    assert!(k.contains(&[rat(1), rat(-1)]));
    assert!(kernel_basis(&Matrix::<Rational>::identity(3)).is_zero());
    assert!(kernel_basis(&m(&[&[1, 2], &[2, 4]])).contains(&[rat(2), rat(-1)]));
    assert_eq!(gram_coefficients(&Matrix::<Rational>::identity(2)).gamma, vec![rat(1), rat(2), rat(1)]);
}

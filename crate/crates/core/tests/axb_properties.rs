use nilorbit::axb::{classify_group, GroupClass, SpectralEigenvalue, SpectralSpec};
use nilorbit::exactla::Matrix;
use nilorbit::exactnum::{ratio, FieldElement, RealAlgebraicField};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[derive(Clone, Copy, Debug)]
enum Piece {
    Real(i64),
    Rotation(i64),
    SqrtRotation,
}

fn piece(with_sqrt: bool) -> impl Strategy<Value = Piece> {
    let base = prop_oneof![
        prop_oneof![Just(1i64), Just(-1)].prop_map(Piece::Real),
        (1i64..=2).prop_map(Piece::Rotation),
    ];
    if with_sqrt {
        prop_oneof![3 => base, 1 => Just(Piece::SqrtRotation)].boxed()
    } else {
        base.boxed()
    }
}

fn assemble(pieces: &[Piece]) -> Matrix {
    let k = RealAlgebraicField::sqrt(2).unwrap();
    let n: usize = pieces.iter().map(|p| if matches!(p, Piece::Real(_)) { 1 } else { 2 }).sum();
    let mut m = Matrix::zeros(n, n);
    let mut at = 0;
    for p in pieces {
        match p {
            Piece::Real(c) => {
                m.set(at, at, FieldElement::int(*c));
                at += 1;
            }
            Piece::Rotation(_) | Piece::SqrtRotation => {
                let t = match p {
                    Piece::Rotation(c) => FieldElement::int(*c),
                    _ => k.generator(),
                };
                m.set(at, at + 1, -t.clone());
                m.set(at + 1, at, t);
                at += 2;
            }
        }
    }
    m
}

fn invertible(n: usize, v: &[i64]) -> Matrix {
    let l = Matrix::from_fn(n, n, |i, j| if i == j { FieldElement::one() } else if i > j { FieldElement::int(v[i * n + j]) } else { FieldElement::zero() });
    let u = Matrix::from_fn(n, n, |i, j| if i == j { FieldElement::one() } else if i < j { FieldElement::int(v[n * n + i * n + j]) } else { FieldElement::zero() });
    l.mul(&u)
}

fn verdict(m: &Matrix) -> (GroupClass, bool, bool, bool) {
    let field = RealAlgebraicField::sqrt(2).ok();
    let v = classify_group(&SpectralSpec::matrix(m.clone(), field).unwrap()).unwrap();
    (v.group_class, v.s_d_closed, v.semisimple, v.purely_imaginary_spectrum)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spectra_in_unit_and_double_rotations_are_type_one(pieces in prop::collection::vec(piece(false), 1..=3)) {
        prop_assert_eq!(verdict(&assemble(&pieces)).0, GroupClass::TypeI);
    }

    #[test]
    fn verdict_is_invariant_under_scaling_transpose_and_similarity(
        pieces in prop::collection::vec(piece(true), 1..=3),
        num in prop_oneof![-3i64..=-1, 1i64..=3],
        den in 1i64..=3,
        mix in prop::collection::vec(-1i64..=1, 72),
    ) {
        let d = assemble(&pieces);
        let n = d.rows();
        let base = verdict(&d);
        let scaled = d.scale(&FieldElement::rational(ratio(num, den)));
        prop_assert_eq!(verdict(&scaled), base);
        prop_assert_eq!(verdict(&d.transpose()), base);
        let p = invertible(n, &mix);
        let conj = p.mul(&d).mul(&p.inverse().unwrap());
        prop_assert_eq!(verdict(&conj), base);
    }

    #[test]
    fn matrix_and_explicit_spectrum_agree(pieces in prop::collection::vec(piece(true), 1..=3)) {
        let d = assemble(&pieces);
        let k = RealAlgebraicField::sqrt(2).unwrap();
        let upper = pieces
            .iter()
            .map(|p| {
                let (re, im) = match p {
                    Piece::Real(c) => (FieldElement::int(*c), FieldElement::zero()),
                    Piece::Rotation(c) => (FieldElement::zero(), FieldElement::int(*c)),
                    Piece::SqrtRotation => (FieldElement::zero(), k.generator()),
                };
                SpectralEigenvalue { re, im, multiplicity: 1, semisimple: true }
            })
            .fold(Vec::<SpectralEigenvalue>::new(), |mut acc, e| {
                match acc.iter_mut().find(|f| f.re == e.re && f.im == e.im) {
                    Some(f) => f.multiplicity += 1,
                    None => acc.push(e),
                }
                acc
            });
        let spec = SpectralSpec::explicit_closed(d.rows(), upper).unwrap();
        let v = classify_group(&spec).unwrap();
        prop_assert_eq!((v.group_class, v.s_d_closed, v.semisimple, v.purely_imaginary_spectrum), verdict(&d));
    }
}

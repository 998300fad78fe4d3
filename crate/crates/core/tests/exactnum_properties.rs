use std::sync::Arc;

use nilorbit::exactnum::sturm::root_bound;
use nilorbit::exactnum::{
    element_rational_part, element_sign, factor_over_q, rat, ratio, sturm_real_roots, FieldElement, Poly,
    RealAlgebraicField, Rational, SturmChain,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn sqrt2() -> Arc<RealAlgebraicField> {
    RealAlgebraicField::sqrt(2).unwrap()
}

fn cbrt2() -> Arc<RealAlgebraicField> {
    RealAlgebraicField::new(Poly::from_rationals(&[rat(-2), rat(0), rat(0), rat(1)]), rat(1), rat(2)).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn element(field: Arc<RealAlgebraicField>) -> impl Strategy<Value = FieldElement> {
    let d = field.degree();
    prop::collection::vec(small_rational(), d).prop_map(move |c| FieldElement::from_coords(c, Some(field.clone())))
}

fn poly_up_to(deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(-9i64..=9, 1..=deg + 1)
        .prop_map(|c| Poly::new(c.into_iter().map(rat).collect()))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms_sqrt2(a in element(sqrt2()), b in element(sqrt2()), c in element(sqrt2())) {
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &(FieldElement::one() / a.clone()), FieldElement::one());
        }
    }

    #[test]
    fn field_axioms_cbrt2(a in element(cbrt2()), b in element(cbrt2()), c in element(cbrt2())) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &(FieldElement::one() / a.clone()), FieldElement::one());
        }
    }

    #[test]
    fn sturm_interval_count_matches_chain(p in poly_up_to(8)) {
        let roots = sturm_real_roots(&p).unwrap();
        let chain = SturmChain::new(&p);
        let b = root_bound(&p);
        let bound_count = chain.variations_at(&-b.clone()) - chain.variations_at(&b);
        prop_assert_eq!(roots.len(), bound_count);
        for w in roots.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for r in &roots {
            prop_assert_eq!(chain.count_open(&r.lo, &r.hi) + usize::from(chain.is_root(&r.hi)), 1);
        }
        let total: usize = roots.iter().map(|r| r.multiplicity).sum();
        prop_assert!(total <= p.deg());
    }

    #[test]
    fn sturm_counts_roots_of_constructed_products(
        roots in prop::collection::btree_set(-12i64..=12, 0..=5),
        mults in prop::collection::vec(1usize..=2, 5),
        shifts in prop::collection::vec(1i64..=5, 0..=2),
    ) {
        // ∏(x − r)^m · ∏(x² + s) has exactly the chosen real roots
        let mut p = Poly::one();
        for (r, m) in roots.iter().zip(&mults) {
            p = &p * &Poly::linear_root(ratio(*r, 2)).pow(*m as u32);
        }
        for s in &shifts {
            p = &p * &Poly::from_rationals(&[rat(*s), rat(0), rat(1)]);
        }
        let found = sturm_real_roots(&p).unwrap();
        prop_assert_eq!(found.len(), roots.len());
        for ((r, m), iv) in roots.iter().zip(&mults).zip(&found) {
            let x = ratio(*r, 2);
            prop_assert!(iv.lo <= x && x <= iv.hi);
            prop_assert_eq!(iv.multiplicity, *m);
        }
    }

    #[test]
    fn factorization_expands_back(p in poly_up_to(7)) {
        let factors = factor_over_q(&p).unwrap();
        let mut prod = Poly::constant(p.leading());
        for (f, m) in &factors {
            prop_assert_eq!(f.leading(), rat(1));
            prod = &prod * &f.pow(*m as u32);
        }
        prop_assert_eq!(prod, p);
    }

    #[test]
    fn sign_agrees_with_floats(a in element(sqrt2())) {
        let x: f64 = a.coords_padded(2).iter().enumerate()
            .map(|(k, c)| nilorbit::exactnum::rational::rational_to_f64(c) * 2f64.sqrt().powi(k as i32))
            .sum();
        if x.abs() > 1e-6 {
            prop_assert_eq!(element_sign(&a), if x > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn sign_agrees_with_floats_cubic(a in element(cbrt2())) {
        let x: f64 = a.coords_padded(3).iter().enumerate()
            .map(|(k, c)| nilorbit::exactnum::rational::rational_to_f64(c) * 2f64.cbrt().powi(k as i32))
            .sum();
        if x.abs() > 1e-6 {
            prop_assert_eq!(element_sign(&a), if x > 0.0 { 1 } else { -1 });
        }
    }
}

#[test]
fn documented_examples() {
    let x2m2 = Poly::from_rationals(&[rat(-2), rat(0), rat(1)]);
    let r = sturm_real_roots(&x2m2).unwrap();
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|iv| iv.multiplicity == 1));
    assert!(r[0].hi <= rat(0) && r[1].lo >= rat(0));
    assert!(sturm_real_roots(&Poly::<Rational>::from_rationals(&[rat(1), rat(0), rat(1)])).unwrap().is_empty());
    let sq = sturm_real_roots(&Poly::linear_root(rat(1)).pow(2)).unwrap();
    assert_eq!(sq.len(), 1);
    assert_eq!(sq[0].multiplicity, 2);
    assert!(sturm_real_roots(&Poly::<Rational>::zero()).is_err());

    let x4m1 = Poly::from_rationals(&[rat(-1), rat(0), rat(0), rat(0), rat(1)]);
    let f = factor_over_q(&x4m1).unwrap();
    assert_eq!(f.len(), 3);
    assert!(f.contains(&(Poly::linear_root(rat(1)), 1)));
    assert!(f.contains(&(Poly::linear_root(rat(-1)), 1)));
    assert!(f.contains(&(Poly::from_rationals(&[rat(1), rat(0), rat(1)]), 1)));
    assert_eq!(
        factor_over_q(&Poly::from_rationals(&[rat(1), rat(2), rat(1)])).unwrap(),
        vec![(Poly::linear_root(rat(-1)), 2)]
    );
    assert_eq!(factor_over_q(&x2m2).unwrap(), vec![(x2m2.clone(), 1)]);

    let k = sqrt2();
    let a = k.generator();
    let e = FieldElement::rational(ratio(3, 2)).promote(&k);
    assert_eq!(element_rational_part(&e), Some(ratio(3, 2)));
    assert_eq!(element_rational_part(&a), None);
    let two_a = a.clone() * &FieldElement::int(2);
    let cancel = FieldElement::one() + &two_a - two_a;
    assert_eq!(element_rational_part(&cancel), Some(rat(1)));
    assert_eq!(element_sign(&(a.clone() - FieldElement::one())), 1);
    assert_eq!(element_sign(&(a.clone() * &a - FieldElement::int(2))), 0);
    assert_eq!(element_sign(&-a), -1);
}

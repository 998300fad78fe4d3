use nilorbit::exactnum::FieldElement;
use nilorbit::fixtures::{heisenberg_adjoint, prop_nonabelian, rotation_pair, varying_isotropy, Theta};
use nilorbit::regularity::{is_regular_point, isotropy_algebra};
use num_traits::Zero;
use proptest::prelude::*;

fn point(n: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec(-6i64..=6, n)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| v.into_iter().map(FieldElement::int).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heisenberg_adjoint_points_are_regular(v in point(3)) {
        let ctx = heisenberg_adjoint();
        prop_assert!(is_regular_point(&v, &ctx).unwrap().regular);
    }

    #[test]
    fn nonabelian_regular_iff_a_plane_vanishes(v in point(4)) {
        let ctx = prop_nonabelian(Theta::Sqrt2).unwrap();
        let z1 = !v[0].is_zero() || !v[1].is_zero();
        let z2 = !v[2].is_zero() || !v[3].is_zero();
        prop_assert_eq!(is_regular_point(&v, &ctx).unwrap().regular, !(z1 && z2));
        // a rational speed ratio makes every point regular
        let rational = prop_nonabelian(Theta::Rational(3)).unwrap();
        prop_assert!(is_regular_point(&v, &rational).unwrap().regular);
    }

    #[test]
    fn rotation_pairs_are_regular(p in 1i64..=5, q in 1i64..=5, v in point(4)) {
        let ctx = rotation_pair(p, q).unwrap();
        prop_assert!(is_regular_point(&v, &ctx).unwrap().regular);
    }

    #[test]
    fn isotropy_is_independent_of_scaling(v in point(7), c in 1i64..=4) {
        let ctx = varying_isotropy().unwrap();
        let w: Vec<FieldElement> = v.iter().map(|x| x.clone() * FieldElement::int(c)).collect();
        prop_assert_eq!(isotropy_algebra(&v, &ctx.split).canonical(), isotropy_algebra(&w, &ctx.split).canonical());
        prop_assert_eq!(is_regular_point(&v, &ctx).unwrap().regular, is_regular_point(&w, &ctx).unwrap().regular);
    }
}

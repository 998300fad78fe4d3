use nalgebra::DMatrix;
use nilorbit::oracle::{orbit_sample, recurrence_score, FloatRep, Grid, RecurrenceParams, VerdictHint};
use proptest::prelude::*;

fn rotations(speeds: &[f64]) -> FloatRep {
    let n = 2 * speeds.len();
    let mut m = DMatrix::zeros(n, n);
    for (b, t) in speeds.iter().enumerate() {
        m[(2 * b, 2 * b + 1)] = -t;
        m[(2 * b + 1, 2 * b)] = *t;
    }
    FloatRep::new(n, vec![m]).unwrap()
}

fn nonzero(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, n).prop_filter("nonzero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-2)
}

fn short() -> RecurrenceParams {
    RecurrenceParams {
        t_max: 1500.0,
        ..RecurrenceParams::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rational_speeds_are_never_non_regular(p in 1i64..=4, q in 1i64..=4, v in nonzero(4)) {
        let s = recurrence_score(&rotations(&[p as f64, q as f64]), &v, &short()).unwrap();
        prop_assert_ne!(s.verdict_hint, VerdictHint::LikelyNonRegular);
        prop_assert!(s.period.is_some());
    }

    #[test]
    fn scores_are_deterministic(a in 0.5f64..4.0, b in 0.5f64..4.0, v in nonzero(4)) {
        let rep = rotations(&[a, b]);
        prop_assert_eq!(recurrence_score(&rep, &v, &short()).unwrap(), recurrence_score(&rep, &v, &short()).unwrap());
    }

    #[test]
    fn rotation_samples_stay_on_the_sphere(a in 0.5f64..4.0, b in 0.5f64..4.0, v in nonzero(4), steps in 1usize..20) {
        let s = orbit_sample(&rotations(&[a, b]), &v, Grid { radius: 10.0, steps }).unwrap();
        let r: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assert_eq!(s.points.len(), steps);
        for (pt, d) in s.points.iter().zip(&s.norms) {
            let norm: f64 = pt.iter().map(|x| x * x).sum::<f64>().sqrt();
            prop_assert!((norm - r).abs() < 1e-9 * r.max(1.0));
            prop_assert!(*d <= 2.0 * r + 1e-9);
        }
    }
}

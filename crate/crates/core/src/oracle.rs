//! Floating-point orbit sampling and recurrence heuristics.
//!
//! Everything here is advisory. Orbits `exp(dρ(x))·v` are evaluated with
//! nalgebra's Padé scaling-and-squaring exponential, and no exact module reads
//! these results.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::nilrep::RepData;

/// `dρ(x_i)` as float matrices.
#[derive(Clone, Debug)]
pub struct FloatRep {
    images: Vec<DMatrix<f64>>,
    space_dim: usize,
}

impl FloatRep {
    pub fn new(space_dim: usize, images: Vec<DMatrix<f64>>) -> Result<Self> {
        for (i, m) in images.iter().enumerate() {
            if m.nrows() != space_dim || m.ncols() != space_dim {
                return Err(Error::Dimension(format!(
                    "image of x{} is {}×{}, expected {space_dim}×{space_dim}",
                    i + 1,
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        Ok(FloatRep { images, space_dim })
    }

    pub fn from_exact(rep: &RepData) -> Self {
        let n = rep.space_dim();
        FloatRep {
            images: rep.images().iter().map(to_float).collect(),
            space_dim: n,
        }
    }

    /// The one-parameter group `t ↦ e^{tD}`.
    pub fn one_parameter(d: &Matrix) -> Result<Self> {
        if !d.is_square() {
            return Err(Error::Dimension("generator must be square".into()));
        }
        Ok(FloatRep {
            images: vec![to_float(d)],
            space_dim: d.rows(),
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.images.len()
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    /// `dρ(Σ x_i e_i)`.
    pub fn generator(&self, x: &[f64]) -> DMatrix<f64> {
        x.iter()
            .zip(&self.images)
            .fold(DMatrix::zeros(self.space_dim, self.space_dim), |acc, (c, m)| acc + m * *c)
    }

    fn check_point(&self, v: &[f64]) -> Result<()> {
        if v.len() != self.space_dim {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, expected {}",
                v.len(),
                self.space_dim
            )));
        }
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("point has non-finite coordinates".into()));
        }
        Ok(())
    }
}

fn to_float(m: &Matrix) -> DMatrix<f64> {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_f64())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub radius: f64,
    /// Points per axis on `[−radius, radius]`.
    pub steps: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            radius: std::f64::consts::TAU,
            steps: 64,
        }
    }
}

const MAX_GRID_POINTS: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitSample {
    pub parameters: Vec<Vec<f64>>,
    pub points: Vec<Vec<f64>>,
    /// `|g·v − v|` for each point.
    pub norms: Vec<f64>,
    /// Indices of points whose exponential overflowed.
    pub overflow: Vec<usize>,
}

/// Evaluates `exp(dρ(x))·v` on the product grid of `steps` evenly spaced values per
/// algebra coordinate.
pub fn orbit_sample(rep: &FloatRep, v: &[f64], grid: Grid) -> Result<OrbitSample> {
    rep.check_point(v)?;
    if !(grid.radius > 0.0 && grid.radius.is_finite()) {
        return Err(Error::InvalidParameter(format!("grid radius must be positive, got {}", grid.radius)));
    }
    if grid.steps == 0 {
        return Err(Error::InvalidParameter("grid needs at least one step".into()));
    }
    let d = rep.algebra_dim();
    let total = (0..d).try_fold(1usize, |acc, _| acc.checked_mul(grid.steps).filter(|&t| t <= MAX_GRID_POINTS));
    let total = total.ok_or_else(|| {
        Error::InvalidParameter(format!("grid of {}^{d} points exceeds {MAX_GRID_POINTS}", grid.steps))
    })?;
    let axis: Vec<f64> = if grid.steps == 1 {
        vec![0.0]
    } else {
        (0..grid.steps)
            .map(|k| -grid.radius + 2.0 * grid.radius * k as f64 / (grid.steps - 1) as f64)
            .collect()
    };
    let base = DVector::from_column_slice(v);
    let evaluated: Vec<(Vec<f64>, Vec<f64>, f64)> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut x = vec![0.0; d];
            for c in x.iter_mut() {
                *c = axis[idx % grid.steps];
                idx /= grid.steps;
            }
            let p = rep.generator(&x).exp() * &base;
            let dist = (&p - &base).norm();
            (x, p.iter().copied().collect(), dist)
        })
        .collect();
    let mut out = OrbitSample {
        parameters: Vec::with_capacity(total),
        points: Vec::with_capacity(total),
        norms: Vec::with_capacity(total),
        overflow: Vec::new(),
    };
    for (i, (x, p, dist)) in evaluated.into_iter().enumerate() {
        if !dist.is_finite() || p.iter().any(|c| !c.is_finite()) {
            out.overflow.push(i);
        }
        out.parameters.push(x);
        out.points.push(p);
        out.norms.push(dist);
    }
    Ok(out)
}

impl OrbitSample {
    /// Rows of `parameter…, coordinate…, distance`.
    pub fn to_csv(&self) -> String {
        let d = self.parameters.first().map_or(0, Vec::len);
        let n = self.points.first().map_or(0, Vec::len);
        let mut header: Vec<String> = (1..=d).map(|i| format!("t{i}")).collect();
        header.extend((1..=n).map(|i| format!("v{i}")));
        header.push("distance".into());
        let mut s = header.join(",");
        s.push('\n');
        for ((x, p), dist) in self.parameters.iter().zip(&self.points).zip(&self.norms) {
            let row: Vec<String> = x.iter().chain(p).chain(std::iter::once(dist)).map(|c| format!("{c:e}")).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceParams {
    /// Returns are only counted at parameters `t ≥ t_min`.
    pub t_min: f64,
    pub t_max: f64,
    pub epsilon: f64,
    /// Direction in the Lie algebra; `x_1` when absent.
    pub direction: Option<Vec<f64>>,
}

impl Default for RecurrenceParams {
    fn default() -> Self {
        RecurrenceParams {
            t_min: 10.0,
            t_max: 1e4,
            epsilon: 1e-2,
            direction: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictHint {
    LikelyRegular,
    LikelyNonRegular,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecurrenceScore {
    /// Smallest `|e^{tA}v − v| / |v|` over `t ∈ [t_min, t_max]`.
    pub min_return_distance: f64,
    /// Parameter at which the minimum was attained.
    pub min_return_parameter: Option<f64>,
    /// `ln(|e^{tA}v| / |v|) / ln(1 + t)` at the end of the scan.
    pub divergence_rate: f64,
    /// `max_t |e^{tA}v| / |v|` over the scan.
    pub max_norm_ratio: f64,
    /// First return below ε whose multiples all stay within ε, if any.
    pub period: Option<f64>,
    pub verdict_hint: VerdictHint,
    pub params: RecurrenceParams,
}

const DIVERGENCE_THRESHOLD: f64 = 0.5;
const BOUNDED_RATIO: f64 = 1e3;
const OVERFLOW_RATIO: f64 = 1e150;
const MAX_SCAN_STEPS: f64 = 2e7;
const MIN_MULTIPLES: usize = 64;
const MAX_PERIOD_CANDIDATES: usize = 64;
/// Largest parameter at which a drift check is evaluated; beyond it `f64` times are too coarse.
const MAX_DRIFT_PARAMETER: f64 = 1e9;

/// Scans `t ↦ e^{tA}v` for near-returns to `v` and for escape to infinity, where `A` is the
/// image of the chosen direction.
///
/// A near-return at `t_0` is treated as a period, and the orbit as compact, when
/// `e^{k t_0 A}v` stays within ε of `v` for every `k` up to `max(t_max / t_0, 64)`, and
/// the return near `K t_0` is still within ε for `K = ⌈2ε/d_0⌉`, where `d_0` is the distance
/// at `t_0`. A near-miss drifts by about `d_0` per multiple and fails the second test.
pub fn recurrence_score(rep: &FloatRep, v: &[f64], params: &RecurrenceParams) -> Result<RecurrenceScore> {
    rep.check_point(v)?;
    let p = params;
    if !(p.t_min >= 0.0 && p.t_min < p.t_max && p.t_max.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 0 ≤ t_min < t_max, got {} and {}",
            p.t_min, p.t_max
        )));
    }
    if !(p.epsilon > 0.0) {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let direction = match &p.direction {
        Some(x) if x.len() != rep.algebra_dim() => {
            return Err(Error::Dimension(format!(
                "direction has {} coordinates, expected {}",
                x.len(),
                rep.algebra_dim()
            )))
        }
        Some(x) => x.clone(),
        None if rep.algebra_dim() == 0 => {
            return Err(Error::Dimension("the zero algebra has no one-parameter subgroups".into()))
        }
        None => {
            let mut x = vec![0.0; rep.algebra_dim()];
            x[0] = 1.0;
            x
        }
    };
    let a = rep.generator(&direction);
    let base = DVector::from_column_slice(v);
    let vnorm = base.norm();
    if vnorm == 0.0 {
        return Ok(RecurrenceScore {
            min_return_distance: 0.0,
            min_return_parameter: None,
            divergence_rate: 0.0,
            max_norm_ratio: 0.0,
            period: None,
            verdict_hint: VerdictHint::Inconclusive,
            params: p.clone(),
        });
    }
    let speed = a.norm().max(1e-12);
    let flow = Flow {
        a: &a,
        base: &base,
        vnorm,
        speed,
    };

    let dt = (0.02 / speed).clamp(1e-4, 0.05).max(p.t_max / MAX_SCAN_STEPS);
    let step = (&a * dt).exp();
    let steps = (p.t_max / dt).ceil() as usize;

    let mut cur = base.clone();
    let mut next = base.clone();
    let mut diff = base.clone();
    let mut min_dist = f64::INFINITY;
    let mut min_t = None;
    let mut max_ratio = 1.0f64;
    let mut end_ratio = 1.0;
    let mut end_t = 0.0;
    let mut period = None;
    let mut candidates = 0;
    let mut diverged = false;
    let (mut d2, mut d1) = (f64::INFINITY, f64::INFINITY);
    let window = p.epsilon + 2.0 * speed * dt;
    for k in 1..=steps {
        let t = k as f64 * dt;
        step.mul_to(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
        let ratio = cur.norm() / vnorm;
        if !ratio.is_finite() || ratio > OVERFLOW_RATIO {
            diverged = true;
            end_ratio = if ratio.is_finite() { ratio } else { OVERFLOW_RATIO };
            end_t = t;
            break;
        }
        max_ratio = max_ratio.max(ratio);
        end_ratio = ratio;
        end_t = t;
        diff.copy_from(&cur);
        diff -= &base;
        let dist = diff.norm() / vnorm;
        let t_prev = t - dt;
        if t_prev >= p.t_min && d1 <= d2 && d1 <= dist && d1 < window {
            let (tr, dr) = flow.refine(t_prev - dt, t);
            if dr < min_dist {
                min_dist = dr;
                min_t = Some(tr);
            }
            if dr < p.epsilon && period.is_none() && candidates < MAX_PERIOD_CANDIDATES {
                candidates += 1;
                if flow.returns_at_multiples(tr, dr, p.t_max, p.epsilon) {
                    period = Some(tr);
                }
            }
        }
        if t >= p.t_min && dist < min_dist {
            min_dist = dist;
            min_t = Some(t);
        }
        d2 = d1;
        d1 = dist;
    }
    let divergence_rate = if end_t > 0.0 {
        end_ratio.ln() / (1.0 + end_t).ln()
    } else {
        0.0
    };
    let divergent = diverged || divergence_rate > DIVERGENCE_THRESHOLD;
    let bounded = !diverged && max_ratio <= BOUNDED_RATIO;
    let near_return = min_dist < p.epsilon;
    let verdict_hint = if near_return && bounded && period.is_none() {
        VerdictHint::LikelyNonRegular
    } else if divergent || !near_return || period.is_some() {
        VerdictHint::LikelyRegular
    } else {
        VerdictHint::Inconclusive
    };
    Ok(RecurrenceScore {
        min_return_distance: min_dist,
        min_return_parameter: min_t,
        divergence_rate,
        max_norm_ratio: max_ratio,
        period,
        verdict_hint,
        params: p.clone(),
    })
}

struct Flow<'a> {
    a: &'a DMatrix<f64>,
    base: &'a DVector<f64>,
    vnorm: f64,
    speed: f64,
}

impl Flow<'_> {
    fn distance(&self, t: f64) -> f64 {
        let p = (self.a * t).exp() * self.base;
        (p - self.base).norm() / self.vnorm
    }

    /// Golden-section minimum of the return distance on `[lo, hi]`.
    fn refine(&self, mut lo: f64, mut hi: f64) -> (f64, f64) {
        let g = (5f64.sqrt() - 1.0) / 2.0;
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let (mut f1, mut f2) = (self.distance(x1), self.distance(x2));
        for _ in 0..80 {
            if hi - lo <= 1e-13 * hi.abs().max(1.0) {
                break;
            }
            if f1 <= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = self.distance(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = self.distance(x2);
            }
        }
        if f1 <= f2 {
            (x1, f1)
        } else {
            (x2, f2)
        }
    }

    fn returns_at_multiples(&self, t0: f64, d0: f64, t_max: f64, eps: f64) -> bool {
        let count = ((t_max / t0).floor() as usize).max(MIN_MULTIPLES);
        if !(2..=count).all(|k| self.distance(k as f64 * t0) < eps) {
            return false;
        }
        let k = (2.0 * eps / d0.max(f64::MIN_POSITIVE)).ceil().min((MAX_DRIFT_PARAMETER / t0).floor());
        if k <= count as f64 {
            return true;
        }
        // the exact return near k·t0 is off by at most about k·d0 / speed
        let center = k * t0;
        let h = 4.0 * eps / self.speed;
        self.refine(center - h, center + h).1 < eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{SQRT_2, TAU};

    fn rotations(thetas: &[f64]) -> FloatRep {
        let n = 2 * thetas.len();
        let mut m = DMatrix::zeros(n, n);
        for (b, t) in thetas.iter().enumerate() {
            m[(2 * b, 2 * b + 1)] = -t;
            m[(2 * b + 1, 2 * b)] = *t;
        }
        FloatRep::new(n, vec![m]).unwrap()
    }

    #[test]
    fn rotation_orbit_lies_on_circle() {
        let s = orbit_sample(&rotations(&[1.0]), &[1.0, 0.0], Grid { radius: TAU, steps: 33 }).unwrap();
        assert_eq!(s.points.len(), 33);
        assert_eq!(s.parameters.len(), s.points.len());
        for p in &s.points {
            assert!(((p[0] * p[0] + p[1] * p[1]).sqrt() - 1.0).abs() < 1e-9);
        }
        assert!(s.overflow.is_empty());
        assert!(s.to_csv().starts_with("t1,v1,v2,distance\n"));
    }

    #[test]
    fn exponential_growth_and_overflow() {
        let rep = FloatRep::new(1, vec![DMatrix::from_element(1, 1, 1.0)]).unwrap();
        let s = orbit_sample(&rep, &[1.0], Grid { radius: 5.0, steps: 11 }).unwrap();
        for (x, p) in s.parameters.iter().zip(&s.points) {
            assert!((p[0] - x[0].exp()).abs() < 1e-9 * x[0].exp());
        }
        let s = orbit_sample(&rep, &[1.0], Grid { radius: 1e4, steps: 3 }).unwrap();
        assert_eq!(s.overflow, vec![2]);
        assert!(orbit_sample(&rep, &[1.0], Grid { radius: 0.0, steps: 3 }).is_err());
    }

    #[test]
    fn mautner_orbit_lies_on_torus() {
        let s = orbit_sample(&rotations(&[1.0, SQRT_2]), &[1.0, 0.0, 1.0, 0.0], Grid { radius: 50.0, steps: 101 }).unwrap();
        for p in &s.points {
            assert!(((p[0] * p[0] + p[1] * p[1]) - 1.0).abs() < 1e-9);
            assert!(((p[2] * p[2] + p[3] * p[3]) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn mautner_flow_recurs() {
        let s = recurrence_score(&rotations(&[1.0, SQRT_2]), &[1.0, 0.0, 1.0, 0.0], &RecurrenceParams::default()).unwrap();
        assert_eq!(s.verdict_hint, VerdictHint::LikelyNonRegular, "{s:?}");
        assert!(s.min_return_distance < 1e-2);
        assert!(s.period.is_none());
    }

    #[test]
    fn close_near_miss_is_not_a_period() {
        // returns within about 1e-4 near t ≈ 5283, which 64 multiples do not expose
        let s = recurrence_score(&rotations(&[2.0 + SQRT_2 / 2.0, 4.0]), &[1.0, 0.0, 1.0, 0.0], &RecurrenceParams::default())
            .unwrap();
        assert!(s.min_return_distance < 1e-3);
        assert!(s.period.is_none());
        assert_eq!(s.verdict_hint, VerdictHint::LikelyNonRegular);
    }

    #[test]
    fn rational_pair_is_periodic() {
        let s = recurrence_score(&rotations(&[1.0, 2.0]), &[1.0, 0.0, 1.0, 0.0], &RecurrenceParams::default()).unwrap();
        assert_eq!(s.verdict_hint, VerdictHint::LikelyRegular);
        let t0 = s.period.unwrap();
        assert!((t0 / TAU - (t0 / TAU).round()).abs() < 1e-9);
    }

    #[test]
    fn expanding_flow_diverges() {
        let rep = FloatRep::new(1, vec![DMatrix::from_element(1, 1, 1.0)]).unwrap();
        let s = recurrence_score(&rep, &[0.3], &RecurrenceParams::default()).unwrap();
        assert_eq!(s.verdict_hint, VerdictHint::LikelyRegular);
        assert!(s.divergence_rate > DIVERGENCE_THRESHOLD);
    }

    #[test]
    fn unipotent_flow_never_returns() {
        let rep = FloatRep::new(2, vec![DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0])]).unwrap();
        let s = recurrence_score(&rep, &[0.0, 1.0], &RecurrenceParams::default()).unwrap();
        assert_eq!(s.verdict_hint, VerdictHint::LikelyRegular);
        assert!(s.min_return_distance > 1.0);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let rep = rotations(&[1.0]);
        let p = RecurrenceParams {
            t_min: 5.0,
            t_max: 5.0,
            ..Default::default()
        };
        assert!(recurrence_score(&rep, &[1.0, 0.0], &p).is_err());
        assert!(recurrence_score(&rep, &[1.0], &RecurrenceParams::default()).is_err());
    }
}

//! Command implementations shared by the CLI and the C interface, and the report envelope.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest as _, Sha256};

use crate::axb::{classify_group, GroupClass, OneParameterClass};
use crate::error::{Error, Result};
use crate::exactnum::FieldElement;
use crate::fixtures::files;
use crate::io::{parse_point, parse_problem, FieldJson, ProblemFile, ProblemKind};
use crate::nilrep::{real_form, weight_decomposition};
use crate::oracle::{orbit_sample, recurrence_score, FloatRep, Grid, OrbitSample, RecurrenceParams, RecurrenceScore, VerdictHint};
use crate::regularity::{classify_dichotomy, is_regular_point, DichotomyCase, RepContext, Sampling};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 over the command name, its parameters and the input file contents.
    pub inputs_digest: String,
    pub verdicts: Value,
    pub seed: Option<u64>,
    pub version: String,
}

pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn new(command: &str) -> Self {
        let mut h = Sha256::new();
        h.update(b"nilorbit-inputs-v1\0");
        h.update(command.as_bytes());
        h.update([0]);
        InputDigest(h)
    }

    /// Length-prefixed so that different splits of the same bytes hash differently.
    pub fn add(&mut self, label: &str, bytes: &[u8]) -> &mut Self {
        for part in [label.as_bytes(), bytes] {
            self.0.update((part.len() as u64).to_le_bytes());
            self.0.update(part);
        }
        self
    }

    pub fn finish(self) -> String {
        self.0.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl Report {
    pub fn new(command: &str, digest: InputDigest, verdicts: Value, seed: Option<u64>) -> Self {
        Report {
            command: command.to_string(),
            inputs_digest: digest.finish(),
            verdicts,
            seed,
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("verdicts serialize")
}

fn field_value(p: &ProblemFile) -> Value {
    to_value(&p.field.as_deref().map(FieldJson::of))
}

fn context(p: &ProblemFile) -> Result<RepContext> {
    let (rep, blocks) = p.rep()?;
    RepContext::new(rep.clone(), blocks.cloned())
}

/// Weight spaces, real form, block decomposition and the `dE + dν` split.
pub fn decompose(p: &ProblemFile) -> Result<Value> {
    let (rep, blocks) = p.rep()?;
    let weights = weight_decomposition(rep)?;
    let form = real_form(&weights, rep)?;
    let ctx = RepContext::new(rep.clone(), blocks.cloned())?;
    Ok(json!({
        "field": field_value(p),
        "weights": to_value(&weights),
        "real_form": to_value(&form),
        "blocks": to_value(&ctx.blocks),
        "nu_split": to_value(&ctx.split),
    }))
}

/// Per-point verdicts for `points`, or for the file's own points when `points` is empty.
pub fn regular(p: &ProblemFile, points: &[Vec<FieldElement>]) -> Result<Value> {
    let ctx = context(p)?;
    let pts = if points.is_empty() { &p.points } else { points };
    if pts.is_empty() {
        return Err(Error::malformed("/points", "no points to classify"));
    }
    let verdicts = pts.iter().map(|v| is_regular_point(v, &ctx)).collect::<Result<Vec<_>>>()?;
    Ok(json!({ "field": field_value(p), "points": to_value(&verdicts) }))
}

pub fn dichotomy(p: &ProblemFile, sampling: &Sampling) -> Result<Value> {
    let ctx = context(p)?;
    let v = classify_dichotomy(&ctx, sampling)?;
    Ok(json!({ "field": field_value(p), "dichotomy": to_value(&v) }))
}

pub fn axb(p: &ProblemFile) -> Result<Value> {
    let spec = p.spectral_spec()?;
    let v = classify_group(&spec)?;
    Ok(json!({ "field": field_value(p), "axb": to_value(&v) }))
}

pub fn float_rep(p: &ProblemFile) -> Result<FloatRep> {
    match &p.kind {
        ProblemKind::Representation { rep, .. } => Ok(FloatRep::from_exact(rep)),
        ProblemKind::Matrix(m) => FloatRep::one_parameter(m),
        ProblemKind::Spectrum(_) => Err(Error::malformed("", "orbit sampling needs a representation or a matrix")),
    }
}

pub fn orbit(
    p: &ProblemFile,
    point: &[FieldElement],
    grid: Grid,
    params: &RecurrenceParams,
) -> Result<(OrbitSample, RecurrenceScore)> {
    let rep = float_rep(p)?;
    let v: Vec<f64> = point.iter().map(FieldElement::to_f64).collect();
    Ok((orbit_sample(&rep, &v, grid)?, recurrence_score(&rep, &v, params)?))
}

pub fn orbit_value(sample: &OrbitSample, score: &RecurrenceScore, grid: Grid) -> Value {
    json!({
        "grid": to_value(&grid),
        "sample_count": sample.points.len(),
        "overflow": to_value(&sample.overflow),
        "recurrence": to_value(score),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SelftestOutcome {
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, expected: Value, actual: Result<Value>) -> Check {
    let actual = actual.unwrap_or_else(|e| json!({ "error": e.kind(), "message": e.to_string() }));
    Check {
        name: name.to_string(),
        pass: actual == expected,
        expected,
        actual,
    }
}

fn fixture(text: &str) -> Result<ProblemFile> {
    parse_problem(text)
}

fn axb_pair(text: &str) -> Result<Value> {
    let v = classify_group(&fixture(text)?.spectral_spec()?)?;
    Ok(json!([to_value(&v.one_parameter), to_value(&v.group_class)]))
}

fn regular_flags(text: &str) -> Result<Value> {
    let p = fixture(text)?;
    let ctx = context(&p)?;
    let flags = p
        .points
        .iter()
        .map(|v| is_regular_point(v, &ctx).map(|r| r.regular))
        .collect::<Result<Vec<_>>>()?;
    Ok(to_value(&flags))
}

fn dichotomy_case(text: &str, sampling: &Sampling) -> Result<Value> {
    let p = fixture(text)?;
    Ok(to_value(&classify_dichotomy(&context(&p)?, sampling)?.case))
}

fn hint(text: &str, point: &str) -> Result<Value> {
    let p = fixture(text)?;
    let v = parse_point(point, p.field.as_ref())?;
    let (_, score) = orbit(&p, &v, Grid { radius: 1.0, steps: 1 }, &RecurrenceParams::default())?;
    Ok(to_value(&score.verdict_hint))
}

/// Runs the bundled fixtures; `seed` drives the dichotomy sampling.
pub fn selftest(seed: u64) -> SelftestOutcome {
    let sampling = Sampling {
        seed,
        ..Sampling::default()
    };
    let checks = vec![
        check(
            "mautner_group",
            json!([to_value(&OneParameterClass::IntGammaEmpty), to_value(&GroupClass::Antiliminary)]),
            axb_pair(files::MAUTNER),
        ),
        check(
            "rational_pair_group",
            json!([to_value(&OneParameterClass::AllRegular), to_value(&GroupClass::TypeI)]),
            axb_pair(files::RATIONAL_SPECTRUM),
        ),
        check(
            "mixed_spectrum_group",
            json!([to_value(&OneParameterClass::IntGammaDense), to_value(&GroupClass::Neither)]),
            axb_pair(files::MIXED_SPECTRUM),
        ),
        check(
            "jordan_elliptic_group",
            json!([to_value(&OneParameterClass::IntGammaDense), to_value(&GroupClass::Neither)]),
            axb_pair(files::JORDAN_ELLIPTIC),
        ),
        check(
            "hyperbolic_group",
            json!([to_value(&OneParameterClass::AllRegular), to_value(&GroupClass::TypeI)]),
            axb_pair(files::HYPERBOLIC),
        ),
        check("nonabelian_points", json!([false, true, true, false]), regular_flags(files::NONABELIAN)),
        check(
            "nonabelian_dichotomy",
            to_value(&DichotomyCase::ComplementDenseDenseInterior),
            dichotomy_case(files::NONABELIAN, &sampling),
        ),
        check(
            "nonabelian_rational_dichotomy",
            to_value(&DichotomyCase::IntGammaDense),
            dichotomy_case(files::NONABELIAN_RATIONAL, &sampling),
        ),
        check("heisenberg_points", json!([true, true, true, true]), regular_flags(files::HEISENBERG_ADJOINT)),
        check(
            "heisenberg_dichotomy",
            to_value(&DichotomyCase::IntGammaDense),
            dichotomy_case(files::HEISENBERG_ADJOINT, &sampling),
        ),
        check(
            "rotation_pair_dichotomy",
            to_value(&DichotomyCase::IntGammaDense),
            dichotomy_case(files::ROTATION_PAIR, &sampling),
        ),
        check("rotation_pair_points", json!([true]), regular_flags(files::ROTATION_PAIR)),
        check(
            "mautner_flow_oracle",
            to_value(&VerdictHint::LikelyNonRegular),
            hint(files::MAUTNER_FLOW, "(1, 0, 1, 0)"),
        ),
        check(
            "rotation_pair_oracle",
            to_value(&VerdictHint::LikelyRegular),
            hint(files::ROTATION_PAIR, "(1, 0, 1, 0)"),
        ),
    ];
    SelftestOutcome {
        passed: checks.iter().all(|c| c.pass),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_separates_inputs() {
        let a = {
            let mut d = InputDigest::new("regular");
            d.add("rep", b"ab").add("point", b"c");
            d.finish()
        };
        let b = {
            let mut d = InputDigest::new("regular");
            d.add("rep", b"a").add("point", b"bc");
            d.finish()
        };
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
    }

    #[test]
    fn selftest_passes() {
        let out = selftest(0);
        for c in &out.checks {
            assert!(c.pass, "{}: expected {} got {}", c.name, c.expected, c.actual);
        }
    }
}

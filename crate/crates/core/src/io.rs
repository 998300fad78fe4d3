//! JSON problem files.
//!
//! Rationals are strings `"p/q"` (integers may also be bare JSON numbers), field
//! elements are arrays of rational coordinates in the power basis of `α`, matrices are
//! `{"rows", "cols", "entries"}` and subspaces are lists of column vectors. Every
//! malformed input is reported with the JSON pointer of the offending value.

use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::axb::{SpectralEigenvalue, SpectralSpec};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::exactnum::rational::format_rational;
use crate::exactnum::{parse_rational, FieldElement, Poly, RealAlgebraicField, Rational};
use crate::nilrep::{Block, BlockField, NilpotentLieAlgebra, RepData};

#[derive(Clone, Debug, PartialEq)]
struct Q(Rational);

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Q, E> {
                parse_rational(s).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> std::result::Result<Q, E> {
                Ok(Q(Rational::from_integer(n.into())))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> std::result::Result<Q, E> {
                Ok(Q(Rational::from_integer(n.into())))
            }
        }
        d.deserialize_any(V)
    }
}

/// Coordinates of a field element; a lone rational is accepted without brackets.
#[derive(Clone, Debug, PartialEq)]
struct Elem(Vec<Rational>);

impl<'de> Deserialize<'de> for Elem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Elem;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a field element: an array of rational coordinates")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Elem, E> {
                parse_rational(s).map(|r| Elem(vec![r])).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, n: i64) -> std::result::Result<Elem, E> {
                Ok(Elem(vec![Rational::from_integer(n.into())]))
            }
            fn visit_u64<E: de::Error>(self, n: u64) -> std::result::Result<Elem, E> {
                Ok(Elem(vec![Rational::from_integer(n.into())]))
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Elem, A::Error> {
                let mut out = Vec::new();
                while let Some(Q(r)) = seq.next_element()? {
                    out.push(r);
                }
                if out.is_empty() {
                    return Err(de::Error::custom("a field element needs at least one coordinate"));
                }
                Ok(Elem(out))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    min_poly: Vec<Q>,
    interval: (Q, Q),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Elem>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    c: Vec<Vec<Vec<Q>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    dim: usize,
    images: Vec<RawMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    space: Vec<Vec<Elem>>,
    field: BlockField,
    m: usize,
    alpha: Vec<Elem>,
    beta: Vec<Elem>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEigenvalue {
    re: Elem,
    im: Elem,
    multiplicity: usize,
    #[serde(default = "yes")]
    semisimple: bool,
}

fn yes() -> bool {
    true
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpectrum {
    dim: usize,
    eigenvalues: Vec<RawEigenvalue>,
    /// Conjugates of eigenvalues with positive imaginary part are added automatically.
    #[serde(default)]
    close_under_conjugation: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    field: Option<RawField>,
    algebra: Option<RawAlgebra>,
    rep: Option<RawRep>,
    blocks: Option<Vec<RawBlock>>,
    matrix: Option<RawMatrix>,
    spectrum: Option<RawSpectrum>,
    points: Option<Vec<Vec<Elem>>>,
}

#[derive(Clone, Debug)]
pub enum ProblemKind {
    Representation { rep: RepData, blocks: Option<Vec<Block>> },
    Matrix(Matrix),
    Spectrum(SpectralSpec),
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub field: Option<Arc<RealAlgebraicField>>,
    pub kind: ProblemKind,
    pub points: Vec<Vec<FieldElement>>,
}

impl ProblemFile {
    pub fn rep(&self) -> Result<(&RepData, Option<&Vec<Block>>)> {
        match &self.kind {
            ProblemKind::Representation { rep, blocks } => Ok((rep, blocks.as_ref())),
            _ => Err(Error::malformed("", "expected an algebra and a representation")),
        }
    }

    /// The spectral data for ax+b classification.
    pub fn spectral_spec(&self) -> Result<SpectralSpec> {
        match &self.kind {
            ProblemKind::Matrix(m) => SpectralSpec::matrix(m.clone(), self.field.clone()),
            ProblemKind::Spectrum(s) => Ok(s.clone()),
            ProblemKind::Representation { .. } => Err(Error::malformed("", "expected a matrix or a spectrum")),
        }
    }
}

/// `a.b[3].c` style paths from serde_path_to_error as JSON pointers.
fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut s = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => s.push_str(&format!("/{index}")),
            Segment::Map { key } => s.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => s.push_str(&format!("/{variant}")),
            Segment::Unknown => {}
        }
    }
    s
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = pointer_of(e.path());
        let inner = e.into_inner();
        // drop serde_json's trailing " at line L column C", which the pointer replaces
        let msg = inner.to_string();
        let msg = match msg.rfind(" at line ") {
            Some(i) if inner.line() > 0 => msg[..i].to_string(),
            _ => msg,
        };
        Error::malformed(pointer, msg)
    })
}

struct Ctx {
    field: Option<Arc<RealAlgebraicField>>,
}

impl Ctx {
    fn elem(&self, e: &Elem, ptr: &str) -> Result<FieldElement> {
        let coords = &e.0;
        if coords.len() == 1 || coords[1..].iter().all(|c| c == &Rational::from_integer(0.into())) {
            return Ok(FieldElement::rational(coords[0].clone()));
        }
        match &self.field {
            None => Err(Error::malformed(ptr, "irrational coordinates need a declared field")),
            Some(f) if coords.len() > f.degree() => Err(Error::malformed(
                ptr,
                format!("{} coordinates exceed the field degree {}", coords.len(), f.degree()),
            )),
            Some(f) => Ok(FieldElement::from_coords(coords.clone(), Some(f.clone()))),
        }
    }

    fn vector(&self, v: &[Elem], ptr: &str) -> Result<Vec<FieldElement>> {
        v.iter().enumerate().map(|(i, e)| self.elem(e, &format!("{ptr}/{i}"))).collect()
    }

    fn matrix(&self, m: &RawMatrix, ptr: &str) -> Result<Matrix> {
        if m.entries.len() != m.rows {
            return Err(Error::malformed(
                format!("{ptr}/entries"),
                format!("{} rows given, expected {}", m.entries.len(), m.rows),
            ));
        }
        let mut data = Vec::with_capacity(m.rows * m.cols);
        for (i, row) in m.entries.iter().enumerate() {
            let p = format!("{ptr}/entries/{i}");
            if row.len() != m.cols {
                return Err(Error::malformed(p, format!("{} entries given, expected {}", row.len(), m.cols)));
            }
            data.extend(self.vector(row, &p)?);
        }
        Ok(Matrix::new(m.rows, m.cols, data))
    }
}

fn field_of(raw: &RawField) -> Result<Arc<RealAlgebraicField>> {
    let poly = Poly::new(raw.min_poly.iter().map(|q| q.0.clone()).collect());
    RealAlgebraicField::new(poly, raw.interval.0 .0.clone(), raw.interval.1 .0.clone()).map_err(|e| match e {
        Error::InvalidField(msg) => Error::malformed("/field", msg),
        other => other,
    })
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let raw: RawProblem = from_json(text)?;
    let field = raw.field.as_ref().map(field_of).transpose()?;
    let ctx = Ctx { field: field.clone() };
    let kinds = [raw.rep.is_some() || raw.algebra.is_some(), raw.matrix.is_some(), raw.spectrum.is_some()];
    if kinds.iter().filter(|&&k| k).count() != 1 {
        return Err(Error::malformed(
            "",
            "exactly one of algebra+rep, matrix or spectrum must be present",
        ));
    }
    let kind = if let Some(m) = &raw.matrix {
        ProblemKind::Matrix(ctx.matrix(m, "/matrix")?)
    } else if let Some(s) = &raw.spectrum {
        let mut eigs = Vec::with_capacity(s.eigenvalues.len());
        for (i, e) in s.eigenvalues.iter().enumerate() {
            let p = format!("/spectrum/eigenvalues/{i}");
            eigs.push(SpectralEigenvalue {
                re: ctx.elem(&e.re, &format!("{p}/re"))?,
                im: ctx.elem(&e.im, &format!("{p}/im"))?,
                multiplicity: e.multiplicity,
                semisimple: e.semisimple,
            });
        }
        let spec = if s.close_under_conjugation {
            SpectralSpec::explicit_closed(s.dim, eigs)
        } else {
            SpectralSpec::explicit(s.dim, eigs)
        };
        ProblemKind::Spectrum(spec.map_err(|e| Error::malformed("/spectrum", e.to_string()))?)
    } else {
        let (Some(a), Some(r)) = (&raw.algebra, &raw.rep) else {
            let missing = if raw.algebra.is_none() { "/algebra" } else { "/rep" };
            return Err(Error::malformed(missing, "algebra and rep must be given together"));
        };
        let c = a
            .c
            .iter()
            .map(|m| m.iter().map(|v| v.iter().map(|q| q.0.clone()).collect()).collect())
            .collect();
        let algebra = NilpotentLieAlgebra::new(a.dim, c).map_err(|e| Error::malformed("/algebra/c", e.to_string()))?;
        let images = r
            .images
            .iter()
            .enumerate()
            .map(|(i, m)| ctx.matrix(m, &format!("/rep/images/{i}")))
            .collect::<Result<Vec<_>>>()?;
        let rep = RepData::new(algebra, r.dim, images, field.clone()).map_err(|e| Error::malformed("/rep", e.to_string()))?;
        let blocks = raw
            .blocks
            .as_ref()
            .map(|bs| {
                bs.iter()
                    .enumerate()
                    .map(|(j, b)| {
                        let p = format!("/blocks/{j}");
                        let cols = b
                            .space
                            .iter()
                            .enumerate()
                            .map(|(k, v)| ctx.vector(v, &format!("{p}/space/{k}")))
                            .collect::<Result<Vec<_>>>()?;
                        if let Some(k) = cols.iter().position(|v| v.len() != r.dim) {
                            return Err(Error::malformed(format!("{p}/space/{k}"), "wrong vector length"));
                        }
                        Ok(Block {
                            space: Subspace::span(r.dim, cols),
                            field: b.field,
                            m: b.m,
                            alpha: ctx.vector(&b.alpha, &format!("{p}/alpha"))?,
                            beta: ctx.vector(&b.beta, &format!("{p}/beta"))?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        ProblemKind::Representation { rep, blocks }
    };
    let points = raw
        .points
        .as_ref()
        .map(|ps| {
            ps.iter()
                .enumerate()
                .map(|(i, v)| ctx.vector(v, &format!("/points/{i}")))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?
        .unwrap_or_default();
    Ok(ProblemFile { field, kind, points })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPoint {
    Bare(Vec<Elem>),
    Wrapped { point: Vec<Elem> },
}

/// A point as a JSON array, `{"point": [...]}`, or inline `(a, b, …)` / `a,b,…`.
pub fn parse_point(text: &str, field: Option<&Arc<RealAlgebraicField>>) -> Result<Vec<FieldElement>> {
    let ctx = Ctx { field: field.cloned() };
    let t = text.trim();
    let elems = if t.starts_with('[') || t.starts_with('{') {
        match from_json::<RawPoint>(t)? {
            RawPoint::Bare(v) | RawPoint::Wrapped { point: v } => v,
        }
    } else {
        let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        inner
            .split(',')
            .enumerate()
            .map(|(i, s)| {
                parse_rational(s.trim())
                    .map(|r| Elem(vec![r]))
                    .map_err(|e| Error::malformed(format!("/{i}"), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?
    };
    ctx.vector(&elems, "")
}

/// `{"min_poly": [...], "interval": [lo, hi]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub min_poly: Vec<String>,
    pub interval: [String; 2],
}

impl FieldJson {
    pub fn of(f: &RealAlgebraicField) -> Self {
        let (lo, hi) = f.interval();
        FieldJson {
            min_poly: f.min_poly().coeffs().iter().map(format_rational).collect(),
            interval: [format_rational(lo), format_rational(hi)],
        }
    }
}

//! `key=value` description of a curve from one of the three families.
//!
//! ```text
//! # double line on xy = 0
//! family=reducible
//! A=1
//! B=1
//! F=z
//! G=t
//! h=0
//! ```
//!
//! `family=smooth` takes `d=<n>`; `family=multiline` takes
//! `lines=(0:1)*2,(1:0)*1` and optionally `ruling=first|second`.

use std::collections::BTreeMap;
use std::fmt;

use crate::homology::FreeComplex;
use crate::ideal::Ideal;
use crate::poly::{parse_poly, FieldSpec, Polynomial, Scalar};

use super::{
    build_multiline_ideal, build_reducible_ideal, build_smooth_minimal_ideal, predicted_reducible_resolution,
    predicted_smooth_resolution, CurveError, MultilineSpec, ReducibleCurveSpec, Ruling, SmoothMinimalSpec,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("missing key {0:?}")]
    MissingKey(&'static str),
    #[error(transparent)]
    Invalid(#[from] CurveError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSpec {
    Reducible(ReducibleCurveSpec),
    Smooth(SmoothMinimalSpec),
    Multiline(MultilineSpec),
}

struct Entry {
    line: usize,
    column: usize,
    value: String,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax { line, column, message: message.into() }
}

/// Points `(u:v)` of the ruling with multiplicities.
pub type LineList = Vec<((Scalar, Scalar), u32)>;

/// `(u:v)*d` items separated by commas; `*d` defaults to 1.
pub fn parse_lines(src: &str) -> Result<LineList, String> {
    let mut out = Vec::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (point, mult) = match item.split_once('*') {
            Some((p, m)) => (p.trim(), m.trim().parse::<u32>().map_err(|_| format!("bad multiplicity in {item:?}"))?),
            None => (item, 1),
        };
        let inner = point
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(|| format!("expected (u:v) in {item:?}"))?;
        let (u, v) = inner.split_once(':').ok_or_else(|| format!("expected (u:v) in {item:?}"))?;
        let num = |s: &str| s.trim().parse::<Scalar>().map_err(|_| format!("bad coordinate {s:?} in {item:?}"));
        out.push(((num(u)?, num(v)?), mult));
    }
    if out.is_empty() {
        return Err("no lines given".into());
    }
    Ok(out)
}

impl CurveSpec {
    pub fn parse(text: &str, field: FieldSpec) -> Result<CurveSpec, SpecError> {
        let mut entries: BTreeMap<String, Entry> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(syntax(line, 1, format!("expected key=value, found {:?}", content.trim())));
            };
            let column = key.chars().count() + 2;
            let offset = value.chars().take_while(|c| c.is_whitespace()).count();
            let key = key.trim().to_string();
            if entries.contains_key(&key) {
                return Err(syntax(line, 1, format!("duplicate key {key:?}")));
            }
            entries.insert(key, Entry { line, column: column + offset, value: value.trim().to_string() });
        }
        let get = |k: &'static str| entries.get(k).ok_or(SpecError::MissingKey(k));
        let poly = |k: &'static str| -> Result<Polynomial, SpecError> {
            let e = entries.get(k).or_else(|| entries.get(&k.to_lowercase())).ok_or(SpecError::MissingKey(k))?;
            parse_poly(&e.value, field).map_err(|err| {
                let err = err.on_line(e.line, e.column - 1);
                syntax(err.line, err.column, err.message)
            })
        };
        let family = get("family")?;
        match family.value.as_str() {
            "reducible" => Ok(CurveSpec::Reducible(ReducibleCurveSpec::new(
                poly("A")?,
                poly("B")?,
                poly("F")?,
                poly("G")?,
                poly("h")?,
            )?)),
            "smooth" => {
                let e = get("d")?;
                let d = e.value.parse::<u32>().map_err(|_| syntax(e.line, e.column, "d must be a positive integer"))?;
                Ok(CurveSpec::Smooth(SmoothMinimalSpec::new(field, d)?))
            }
            "multiline" => {
                let e = get("lines")?;
                let lines = parse_lines(&e.value).map_err(|m| syntax(e.line, e.column, m))?;
                let ruling = match entries.get("ruling") {
                    None => Ruling::First,
                    Some(r) => match r.value.as_str() {
                        "first" => Ruling::First,
                        "second" => Ruling::Second,
                        other => return Err(syntax(r.line, r.column, format!("unknown ruling {other:?}"))),
                    },
                };
                Ok(CurveSpec::Multiline(MultilineSpec::new(field, ruling, lines)?))
            }
            other => Err(syntax(
                family.line,
                family.column,
                format!("unknown family {other:?}; expected reducible, smooth or multiline"),
            )),
        }
    }

    pub fn ideal(&self) -> Ideal {
        match self {
            CurveSpec::Reducible(s) => build_reducible_ideal(s),
            CurveSpec::Smooth(s) => build_smooth_minimal_ideal(s),
            CurveSpec::Multiline(s) => build_multiline_ideal(s),
        }
    }

    /// The explicit minimal free resolution, where the family has one.
    pub fn resolution(&self) -> Option<Result<FreeComplex, CurveError>> {
        match self {
            CurveSpec::Reducible(s) => Some(predicted_reducible_resolution(s)),
            CurveSpec::Smooth(s) if s.d() >= 2 => Some(predicted_smooth_resolution(s)),
            _ => None,
        }
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveSpec::Reducible(s) => {
                writeln!(f, "family=reducible")?;
                for (k, p) in [("A", s.a()), ("B", s.b()), ("F", s.f()), ("G", s.g()), ("h", s.h())] {
                    writeln!(f, "{k}={p}")?;
                }
                Ok(())
            }
            CurveSpec::Smooth(s) => writeln!(f, "family=smooth\nd={}", s.d()),
            CurveSpec::Multiline(s) => {
                let ruling = match s.ruling() {
                    Ruling::First => "first",
                    Ruling::Second => "second",
                };
                writeln!(f, "family=multiline\nlines={s}\nruling={ruling}")
            }
        }
    }
}

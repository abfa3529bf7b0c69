//! Reading ideals, curve specs and option values from text.

use crate::curves::CurveSpec;
use crate::ideal::Ideal;
use crate::poly::{parse_poly, FieldSpec, ParseError, Polynomial};

use super::CliError;

/// Generators one per line (or comma separated), `#` starting a comment.
pub fn parse_ideal_fixture(text: &str, field: FieldSpec) -> Result<Ideal, ParseError> {
    let mut gens: Vec<Polynomial> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for piece in content.split(',') {
            if !piece.trim().is_empty() {
                gens.push(parse_poly(piece, field).map_err(|e| e.on_line(i + 1, offset))?);
            }
            offset += piece.chars().count() + 1;
        }
    }
    if gens.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "no generators found".into() });
    }
    Ok(Ideal::new(field, gens).expect("one field"))
}

/// A curve spec when some non-comment line contains `=`.
pub fn looks_like_spec(text: &str) -> bool {
    text.lines().any(|l| l.split('#').next().unwrap_or("").contains('='))
}

pub enum Input {
    Spec(CurveSpec),
    Ideal(Ideal),
}

impl Input {
    pub fn from_text(text: &str, field: FieldSpec) -> Result<Input, CliError> {
        if looks_like_spec(text) {
            Ok(Input::Spec(CurveSpec::parse(text, field)?))
        } else {
            parse_ideal_fixture(text, field).map(Input::Ideal).map_err(|e| CliError::input(e.to_string()))
        }
    }

    pub fn ideal(&self) -> Ideal {
        match self {
            Input::Spec(s) => s.ideal(),
            Input::Ideal(i) => i.clone(),
        }
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    match s.trim() {
        "q" | "Q" | "QQ" => Ok(FieldSpec::Rationals),
        other => {
            let p = other
                .strip_prefix("p=")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::input(format!("--field expects q or p=<prime>, got {other:?}")))?;
            FieldSpec::prime(p).map_err(|e| CliError::input(e.to_string()))
        }
    }
}

pub fn parse_window(s: &str) -> Result<(i32, i32), CliError> {
    let bad = || CliError::input(format!("--window expects lo:hi with lo <= hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let (lo, hi) = (lo.trim().parse::<i32>().map_err(|_| bad())?, hi.trim().parse::<i32>().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

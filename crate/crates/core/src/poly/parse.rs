//! Text form of polynomials.
//!
//! ```text
//! poly    := ['+'|'-'] term (('+'|'-') term)*
//! term    := coeff ('*'? varpow)* | varpow ('*'? varpow)*
//! varpow  := var ('^' nat)?        var in {x, y, z, t}
//! coeff   := int | int '/' int
//! ```
//!
//! Whitespace is ignored, and the Unicode minus sign is accepted as `-`.
//! The canonical form written by `Display` lists terms grevlex-descending,
//! separates them with ` + ` / ` - `, writes powers with `^` and never puts
//! `*` before a variable.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{FieldSpec, Scalar};
use super::monomial::{Monomial, MonomialOrder, Var};
use super::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at(column: usize, message: impl Into<String>) -> Self {
        ParseError { line: 1, column, message: message.into() }
    }

    /// Relocates an error found in a single line of a larger file.
    pub fn on_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, if c == '−' { '-' } else { c }))
            .collect();
        Cursor { chars, pos: 0, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or_else(|| self.chars.last().map(|(i, _)| i + 1).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|(_, c)| *c).collect();
        s.parse().ok()
    }
}

/// Parses a polynomial over `field`.
pub fn parse_poly(src: &str, field: FieldSpec) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.peek().is_none() {
        return Err(ParseError::at(1, "empty polynomial"));
    }
    let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some('+') => {
                cur.bump();
                1
            }
            Some('-') => {
                cur.bump();
                -1
            }
            Some(_) if first => 1,
            Some(c) => return Err(ParseError::at(cur.column(), format!("expected '+' or '-', found '{c}'"))),
            None => break,
        };
        first = false;
        let (m, c) = parse_term(&mut cur)?;
        terms.push((m, if sign < 0 { -c } else { c }));
        if cur.peek().is_none() {
            break;
        }
    }
    Polynomial::from_terms(field, terms).map_err(|e| ParseError::at(1, e.to_string()))
}

fn parse_term(cur: &mut Cursor) -> Result<(Monomial, Scalar), ParseError> {
    let col = cur.column();
    let mut coeff = BigRational::one();
    let mut saw_coeff = false;
    if let Some(n) = cur.integer() {
        saw_coeff = true;
        coeff = BigRational::from_integer(n);
        if cur.peek() == Some('/') {
            cur.bump();
            let dcol = cur.column();
            let d = cur.integer().ok_or_else(|| ParseError::at(dcol, "expected denominator"))?;
            if d.is_zero() {
                return Err(ParseError::at(dcol, "zero denominator"));
            }
            coeff /= BigRational::from_integer(d);
        }
    }
    let mut mono = Monomial::one();
    let mut nvars = 0;
    loop {
        let star = cur.peek() == Some('*');
        if star {
            cur.bump();
        }
        match cur.peek() {
            Some(c) if Var::from_char(c).is_some() => {
                cur.bump();
                let v = Var::from_char(c).unwrap();
                let mut e = 1u16;
                if cur.peek() == Some('^') {
                    cur.bump();
                    let ecol = cur.column();
                    let n = cur.integer().ok_or_else(|| ParseError::at(ecol, "expected exponent"))?;
                    e = u16::try_from(n).map_err(|_| ParseError::at(ecol, "exponent too large"))?;
                }
                mono = mono + Monomial::var(v).pow(e);
                nvars += 1;
            }
            Some(c) if star => {
                return Err(ParseError::at(cur.column(), format!("expected variable after '*', found '{c}'")))
            }
            None if star => return Err(ParseError::at(cur.column(), "expected variable after '*'")),
            Some(c) if c != '+' && c != '-' => {
                return Err(ParseError::at(cur.column(), format!("unexpected character '{c}'")))
            }
            _ => break,
        }
    }
    if !saw_coeff && nvars == 0 {
        return Err(ParseError::at(col, "expected a term"));
    }
    Ok((mono, coeff))
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Scalar, unit_monomial: bool) -> fmt::Result {
    if c.is_one() && !unit_monomial {
        return Ok(());
    }
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).into_iter().enumerate() {
            let c = field.display_value(&c);
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_coeff(f, &c.abs(), m.is_one())?;
            if !m.is_one() {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn accepts_grammar_variants() {
        let a = parse_poly("x*z - y*t", Q).unwrap();
        let b = parse_poly("xz − yt", Q).unwrap();
        let c = parse_poly("-yt + 1xz", Q).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "xz - yt");
        assert_eq!(parse_poly("3/2 x^2 - 1/2*y", Q).unwrap().to_string(), "3/2x^2 - 1/2y");
        assert_eq!(parse_poly("0", Q).unwrap().to_string(), "0");
        assert_eq!(parse_poly("-1", Q).unwrap().to_string(), "-1");
        assert_eq!(parse_poly("2 - x^2", Q).unwrap().to_string(), "-x^2 + 2");
    }

    #[test]
    fn reports_columns() {
        let e = parse_poly("x + w", Q).unwrap_err();
        assert_eq!(e.column, 5);
        let e = parse_poly("x^", Q).unwrap_err();
        assert_eq!(e.message, "expected exponent");
        let e = parse_poly("x*", Q).unwrap_err();
        assert!(e.message.starts_with("expected variable"));
        assert!(parse_poly("", Q).is_err());
        assert!(parse_poly("x ++ y", Q).is_err());
        assert!(parse_poly("1/0", Q).is_err());
    }

    #[test]
    fn prime_field_display_is_symmetric() {
        let f = FieldSpec::prime(101).unwrap();
        let p = parse_poly("xz - yt + 1/2", f).unwrap();
        assert_eq!(p.to_string(), "xz - yt - 50");
        assert_eq!(parse_poly(&p.to_string(), f).unwrap(), p);
    }

    proptest! {
        #[test]
        fn display_round_trips(ts in proptest::collection::vec(
            (proptest::array::uniform4(0u16..4), -20i64..20, 1i64..5), 0..6)
        ) {
            let p = Polynomial::from_terms(
                Q,
                ts.into_iter().map(|(e, n, d)| (Monomial::new(e), BigRational::new(n.into(), d.into()))),
            ).unwrap();
            prop_assert_eq!(parse_poly(&p.to_string(), Q).unwrap(), p);
        }
    }
}

//! Unions of multiple lines from one ruling of the smooth quadric xz = yt.

use std::fmt;

use num_traits::Zero;

use crate::homology::matrix;
use crate::ideal::Ideal;
use crate::poly::{FieldSpec, Polynomial, Scalar, Var};

use super::smooth::smooth_quadric;
use super::CurveError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Ruling {
    /// `(vx - ut, vy - uz)`; `(0:1)` is the line `x = y = 0`.
    #[default]
    First,
    /// `(vx - uy, vt - uz)`; `(0:1)` is the line `x = t = 0`.
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilineSpec {
    field: FieldSpec,
    ruling: Ruling,
    lines: Vec<((Scalar, Scalar), u32)>,
}

impl MultilineSpec {
    pub fn new(field: FieldSpec, ruling: Ruling, lines: Vec<((Scalar, Scalar), u32)>) -> Result<Self, CurveError> {
        if lines.is_empty() {
            return Err(CurveError::InvalidParameter("at least one line is required".into()));
        }
        let mut canon = Vec::with_capacity(lines.len());
        for ((u, v), d) in lines {
            let (u, v) = (
                field.element(u).map_err(|e| CurveError::InvalidParameter(e.to_string()))?,
                field.element(v).map_err(|e| CurveError::InvalidParameter(e.to_string()))?,
            );
            if u.is_zero() && v.is_zero() {
                return Err(CurveError::InvalidParameter("(0:0) is not a point of P^1".into()));
            }
            if d == 0 {
                return Err(CurveError::InvalidParameter(format!("line ({u}:{v}) has multiplicity 0")));
            }
            canon.push(((u, v), d));
        }
        for (i, ((u1, v1), _)) in canon.iter().enumerate() {
            for ((u2, v2), _) in &canon[..i] {
                if field.sub(&field.mul(u1, v2), &field.mul(u2, v1)).is_zero() {
                    let shown = |a: &Scalar| field.display_value(a);
                    return Err(CurveError::RepeatedLine(format!("({}:{})", shown(u1), shown(v1))));
                }
            }
        }
        Ok(MultilineSpec { field, ruling, lines: canon })
    }

    /// Integer parameters over the rationals, first ruling.
    pub fn from_ints(lines: &[((i64, i64), u32)]) -> Result<Self, CurveError> {
        let f = FieldSpec::Rationals;
        MultilineSpec::new(
            f,
            Ruling::First,
            lines.iter().map(|((u, v), d)| ((f.from_int(*u), f.from_int(*v)), *d)).collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ruling(&self) -> Ruling {
        self.ruling
    }

    pub fn lines(&self) -> &[((Scalar, Scalar), u32)] {
        &self.lines
    }

    /// `d = d_1 + ... + d_m`.
    pub fn degree(&self) -> u32 {
        self.lines.iter().map(|(_, d)| d).sum()
    }
}

impl fmt::Display for MultilineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lines
            .iter()
            .map(|((u, v), d)| format!("({}:{})*{d}", self.field.display_value(u), self.field.display_value(v)))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The pair `(ℓ, ℓ')` cutting out the line with parameter `(u:v)`.
fn line_forms(field: FieldSpec, ruling: Ruling, u: &Scalar, v: &Scalar) -> (Polynomial, Polynomial) {
    let var = |x| Polynomial::var(field, x);
    let lin = |a: Var, b: Var| &var(a).scale(v) - &var(b).scale(u);
    match ruling {
        Ruling::First => (lin(Var::X, Var::T), lin(Var::Y, Var::Z)),
        Ruling::Second => (lin(Var::X, Var::Y), lin(Var::T, Var::Z)),
    }
}

pub fn line_ideal(field: FieldSpec, ruling: Ruling, u: &Scalar, v: &Scalar) -> Ideal {
    let (l, m) = line_forms(field, ruling, u, v);
    Ideal::new(field, vec![l, m]).expect("one field")
}

pub fn quadric_form(field: FieldSpec) -> Polynomial {
    smooth_quadric(field)
}

fn quadric_ideal(field: FieldSpec) -> Ideal {
    Ideal::new(field, vec![smooth_quadric(field)]).expect("one field")
}

/// `I_Q + I_{L_1}^{d_1} ... I_{L_m}^{d_m}`.
pub fn build_multiline_ideal(spec: &MultilineSpec) -> Ideal {
    let f = spec.field;
    let product = spec
        .lines
        .iter()
        .map(|((u, v), d)| line_ideal(f, spec.ruling, u, v).power(*d))
        .reduce(|a, b| a.product(&b))
        .expect("nonempty");
    quadric_ideal(f).sum(&product)
}

/// The `d x (d + m)` block-diagonal matrix whose block for a line of
/// multiplicity `d_i` is `d_i x (d_i + 1)` with `ℓ_i` on the diagonal and
/// `ℓ_i'` just above it.
pub fn multiline_matrix(spec: &MultilineSpec) -> Vec<Vec<Polynomial>> {
    let f = spec.field;
    let d = spec.degree() as usize;
    let mut a = vec![vec![Polynomial::zero(f); d + spec.lines.len()]; d];
    let (mut r0, mut c0) = (0, 0);
    for ((u, v), di) in &spec.lines {
        let (l, lp) = line_forms(f, spec.ruling, u, v);
        for k in 0..*di as usize {
            a[r0 + k][c0 + k] = l.clone();
            a[r0 + k][c0 + k + 1] = lp.clone();
        }
        r0 += *di as usize;
        c0 += *di as usize + 1;
    }
    a
}

/// `I_Q + I_d(A)` for the matrix of [`multiline_matrix`].
pub fn determinantal_multiline_ideal(spec: &MultilineSpec) -> Ideal {
    let f = spec.field;
    let a = multiline_matrix(spec);
    let minors: Vec<Polynomial> =
        matrix::minors(f, &a, a.len()).into_iter().map(|m| m.value).filter(|p| !p.is_zero()).collect();
    quadric_ideal(f).sum(&Ideal::new(f, minors).expect("one field"))
}

/// `∩ (I_Q + I_{L_i}^{d_i})`.
pub fn intersection_multiline_ideal(spec: &MultilineSpec) -> Ideal {
    let f = spec.field;
    spec.lines
        .iter()
        .map(|((u, v), d)| quadric_ideal(f).sum(&line_ideal(f, spec.ruling, u, v).power(*d)))
        .reduce(|a, b| a.intersection(&b))
        .expect("nonempty")
}

/// The three descriptions of a multiline ideal and whether they agree.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sum_product: Ideal,
    pub determinantal: Ideal,
    pub intersection: Ideal,
}

impl Decomposition {
    pub fn determinantal_agrees(&self) -> bool {
        self.sum_product.equals(&self.determinantal)
    }

    pub fn intersection_agrees(&self) -> bool {
        self.sum_product.equals(&self.intersection)
    }

    pub fn all_equal(&self) -> bool {
        self.determinantal_agrees() && self.intersection_agrees()
    }
}

pub fn decompose(spec: &MultilineSpec) -> Decomposition {
    Decomposition {
        sum_product: build_multiline_ideal(spec),
        determinantal: determinantal_multiline_ideal(spec),
        intersection: intersection_multiline_ideal(spec),
    }
}

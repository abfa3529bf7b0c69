//! Curves in the class `d f` on the smooth quadric xz = yt.

use crate::homology::{FreeComplex, FreeGradedModule, GradedMap};
use crate::ideal::Ideal;
use crate::poly::{FieldSpec, Monomial, Polynomial, Var};

use super::CurveError;

type Matrix = Vec<Vec<Polynomial>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmoothMinimalSpec {
    field: FieldSpec,
    d: u32,
}

impl SmoothMinimalSpec {
    pub fn new(field: FieldSpec, d: u32) -> Result<Self, CurveError> {
        if d == 0 {
            return Err(CurveError::InvalidParameter("d must be at least 1".into()));
        }
        Ok(SmoothMinimalSpec { field, d })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn d(&self) -> u32 {
        self.d
    }
}

/// `xz - yt`.
pub(crate) fn smooth_quadric(field: FieldSpec) -> Polynomial {
    let v = |x| Polynomial::var(field, x);
    &(&v(Var::X) * &v(Var::Z)) - &(&v(Var::Y) * &v(Var::T))
}

/// `[x^i, x^{i-1} y, ..., y^i]`.
fn p_row(field: FieldSpec, i: u32) -> Vec<Polynomial> {
    (0..=i).map(|k| Polynomial::monomial(field, Monomial::new([(i - k) as u16, k as u16, 0, 0]))).collect()
}

/// `i x (i-1)` with `a` at `(k, k)` and `-b` at `(k+1, k)`.
fn bidiagonal(field: FieldSpec, i: u32, a: Var, b: Var) -> Matrix {
    let i = i as usize;
    let cols = i.saturating_sub(1);
    let mut m = vec![vec![Polynomial::zero(field); cols]; i];
    for k in 0..cols {
        m[k][k] = Polynomial::var(field, a);
        m[k + 1][k] = -Polynomial::var(field, b);
    }
    m
}

fn transpose(m: &Matrix, ncols: usize) -> Matrix {
    (0..ncols).map(|c| m.iter().map(|row| row[c].clone()).collect()).collect()
}

/// `M_i`, `N_i` (both `i x (i-1)`) and the row `P_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureMatrices {
    pub m: Matrix,
    pub n: Matrix,
    pub p: Vec<Polynomial>,
}

pub fn smooth_structure_matrices(field: FieldSpec, i: u32) -> StructureMatrices {
    StructureMatrices {
        m: bidiagonal(field, i, Var::Y, Var::X),
        n: bidiagonal(field, i, Var::Z, Var::T),
        p: p_row(field, i),
    }
}

/// `(xz - yt, x^d, x^{d-1} y, ..., y^d)`.
pub fn build_smooth_minimal_ideal(spec: &SmoothMinimalSpec) -> Ideal {
    let mut gens = vec![smooth_quadric(spec.field)];
    gens.extend(p_row(spec.field, spec.d));
    Ideal::new(spec.field, gens).expect("one field")
}

/// `R <- R(-2) + R^{d+1}(-d) <- R^{2d}(-d-1) <- R^{d-1}(-d-2) <- 0`.
pub fn predicted_smooth_resolution(spec: &SmoothMinimalSpec) -> Result<FreeComplex, CurveError> {
    let (field, d) = (spec.field, spec.d);
    if d < 2 {
        return Err(CurveError::InvalidParameter(format!("the resolution needs d >= 2, got {d}")));
    }
    let di = d as i32;
    let zero = Polynomial::zero(field);
    let big = smooth_structure_matrices(field, d + 1);
    let small = smooth_structure_matrices(field, d);

    let mut phi1 = vec![smooth_quadric(field)];
    phi1.extend(p_row(field, d));

    let mut phi2 = Vec::with_capacity(d as usize + 2);
    let mut top = vec![zero; d as usize];
    top.extend(p_row(field, d - 1).iter().map(|p| -p));
    phi2.push(top);
    for r in 0..=d as usize {
        let mut row = big.m[r].clone();
        row.extend(big.n[r].iter().cloned());
        phi2.push(row);
    }

    let mut phi3 = small.n.clone();
    phi3.extend(small.m.iter().map(|row| row.iter().map(|e| -e).collect::<Vec<_>>()));

    let mut f1 = vec![2];
    f1.extend(std::iter::repeat_n(di, d as usize + 1));
    let f1 = FreeGradedModule::from_degrees(f1);
    let f2 = FreeGradedModule::uniform(di + 1, 2 * d as usize);
    let f3 = FreeGradedModule::uniform(di + 2, d as usize - 1);
    let maps = vec![
        GradedMap::new(field, f1.clone(), FreeGradedModule::from_degrees(vec![0]), vec![phi1])?,
        GradedMap::new(field, f2.clone(), f1, phi2)?,
        GradedMap::new(field, f3, f2, phi3)?,
    ];
    Ok(FreeComplex::new(maps)?)
}

/// The `s x (2s+2)` matrix `[M_{s+1}^T | N_{s+1}^T]` from `R^{2s+2}(-1)` to
/// `R^s`.
pub fn type_ii_presentation(field: FieldSpec, s: u32) -> Result<GradedMap, CurveError> {
    if s == 0 {
        return Err(CurveError::InvalidParameter("s must be at least 1".into()));
    }
    let mats = smooth_structure_matrices(field, s + 1);
    let mut rows = transpose(&mats.m, s as usize);
    for (row, extra) in rows.iter_mut().zip(transpose(&mats.n, s as usize)) {
        row.extend(extra);
    }
    let n = s as usize;
    Ok(GradedMap::new(field, FreeGradedModule::uniform(1, 2 * n + 2), FreeGradedModule::uniform(0, n), rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::cokernel_table;
    use crate::poly::q;
    use std::collections::BTreeMap;

    const QQ: FieldSpec = FieldSpec::Rationals;

    fn parse(m: &[&[&str]]) -> Matrix {
        m.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
    }

    fn mul(a: &Matrix, b: &Matrix) -> Matrix {
        let inner = b.len();
        let cols = b.first().map_or(0, |r| r.len());
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|c| (0..inner).fold(Polynomial::zero(QQ), |acc, k| &acc + &(&row[k] * &b[k][c])))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_matrices() {
        let s = smooth_structure_matrices(QQ, 2);
        assert_eq!(s.m, parse(&[&["y"], &["-x"]]));
        assert_eq!(s.n, parse(&[&["z"], &["-t"]]));
        assert_eq!(s.p, ["x^2", "xy", "y^2"].map(q));
    }

    #[test]
    fn structure_relation() {
        for i in 2..=8 {
            let a = smooth_structure_matrices(QQ, i + 1);
            let b = smooth_structure_matrices(QQ, i);
            assert_eq!(mul(&a.n, &b.m), mul(&a.m, &b.n), "i = {i}");
        }
    }

    #[test]
    fn ideal_generators() {
        let i = build_smooth_minimal_ideal(&SmoothMinimalSpec::new(QQ, 2).unwrap());
        assert_eq!(i.generators(), &["xz - yt", "x^2", "xy", "y^2"].map(q));
        assert!(SmoothMinimalSpec::new(QQ, 0).is_err());
    }

    #[test]
    fn type_ii_small_cases() {
        let p = type_ii_presentation(QQ, 1).unwrap();
        assert_eq!(p.entries(), &parse(&[&["y", "-x", "z", "-t"]]));
        assert_eq!(cokernel_table(&p).unwrap().dims(), &BTreeMap::from([(0, 1)]));
        let p2 = type_ii_presentation(QQ, 2).unwrap();
        assert_eq!(p2.entries(), &parse(&[&["y", "-x", "0", "z", "-t", "0"], &["0", "y", "-x", "0", "z", "-t"]]));
    }
}

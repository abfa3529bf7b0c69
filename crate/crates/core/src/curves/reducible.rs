//! Curves on the reducible quadric xy = 0.

use std::collections::BTreeMap;

use crate::homology::{FreeComplex, FreeGradedModule, GradedMap};
use crate::ideal::{is_regular_sequence, Ideal};
use crate::poly::{FieldSpec, Polynomial, Var};

use super::CurveError;

/// Data `A, B, F, G, h` of a curve with ideal
/// `(xy, x^2 A + x h F, y^2 B + y h G, x A G + y B F + h F G)`.
///
/// The degrees are tied by `deg A = d_F + d_h - 1` and
/// `deg B = d_G + d_h - 1`. When `h = 0` the formal `d_h` is read off from
/// `A` and may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducibleCurveSpec {
    a: Polynomial,
    b: Polynomial,
    f: Polynomial,
    g: Polynomial,
    h: Polynomial,
    d_f: u32,
    d_g: u32,
    d_h: i32,
}

fn deg(p: &Polynomial) -> i32 {
    p.total_degree().expect("nonzero") as i32
}

impl ReducibleCurveSpec {
    pub fn new(a: Polynomial, b: Polynomial, f: Polynomial, g: Polynomial, h: Polynomial) -> Result<Self, CurveError> {
        let field = f.field();
        if [&a, &b, &g, &h].iter().any(|p| p.field() != field) {
            return Err(CurveError::FieldMismatch);
        }
        for (name, p) in [("A", &a), ("B", &b), ("F", &f), ("G", &g), ("h", &h)] {
            if !p.is_homogeneous() {
                return Err(CurveError::NotHomogeneous(format!("{name} = {p}")));
            }
        }
        for (name, p) in [("F", &f), ("G", &g)] {
            if p.is_constant() {
                return Err(CurveError::ConstantForm(name.into()));
            }
        }
        for (name, p, banned, ring) in [
            ("A", &a, &[Var::Y][..], "K[x, z, t]"),
            ("B", &b, &[Var::X][..], "K[y, z, t]"),
            ("F", &f, &[Var::X, Var::Y][..], "K[z, t]"),
            ("G", &g, &[Var::X, Var::Y][..], "K[z, t]"),
            ("h", &h, &[Var::X, Var::Y][..], "K[z, t]"),
        ] {
            if !p.avoids(banned) {
                return Err(CurveError::WrongVariableSupport(format!("{name} = {p} is not in {ring}")));
            }
        }
        if h.is_zero() && (a.is_zero() || b.is_zero()) {
            return Err(CurveError::AbZeroWithHZero);
        }
        let (d_f, d_g) = (deg(&f), deg(&g));
        let d_h = if h.is_zero() { deg(&a) + 1 - d_f } else { deg(&h) };
        if !a.is_zero() && deg(&a) != d_f + d_h - 1 {
            return Err(CurveError::WrongDegrees(format!("deg A = {} but d_F + d_h - 1 = {}", deg(&a), d_f + d_h - 1)));
        }
        if !b.is_zero() && deg(&b) != d_g + d_h - 1 {
            return Err(CurveError::WrongDegrees(format!("deg B = {} but d_G + d_h - 1 = {}", deg(&b), d_g + d_h - 1)));
        }
        let seq = [Polynomial::var(field, Var::X), Polynomial::var(field, Var::Y), f.clone(), g.clone()];
        if !is_regular_sequence(&seq) {
            return Err(CurveError::NotRegularSequence(format!("x, y, {f}, {g}")));
        }
        Ok(ReducibleCurveSpec { a, b, f, g, h, d_f: d_f as u32, d_g: d_g as u32, d_h })
    }

    pub fn field(&self) -> FieldSpec {
        self.f.field()
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn h(&self) -> &Polynomial {
        &self.h
    }

    pub fn d_f(&self) -> u32 {
        self.d_f
    }

    pub fn d_g(&self) -> u32 {
        self.d_g
    }

    pub fn d_h(&self) -> i32 {
        self.d_h
    }

    /// `2 d_h + d_F + d_G`.
    pub fn degree(&self) -> i64 {
        2 * self.d_h as i64 + self.d_f as i64 + self.d_g as i64
    }

    fn generators(&self) -> [Polynomial; 4] {
        let field = self.field();
        let x = Polynomial::var(field, Var::X);
        let y = Polynomial::var(field, Var::Y);
        let (a, b, f, g, h) = (&self.a, &self.b, &self.f, &self.g, &self.h);
        [
            &x * &y,
            &(&(&x * &x) * a) + &(&(&x * h) * f),
            &(&(&y * &y) * b) + &(&(&y * h) * g),
            &(&(&(&x * a) * g) + &(&(&y * b) * f)) + &(&(h * f) * g),
        ]
    }
}

pub fn build_reducible_ideal(spec: &ReducibleCurveSpec) -> Ideal {
    Ideal::new(spec.field(), spec.generators().to_vec()).expect("one field")
}

/// The minimal free resolution `R <- F_1 <- F_2 <- F_3 <- 0` with the
/// explicit matrices. The last map is `[G, -F, -x, y]^T`, the kernel of `φ2`.
pub fn predicted_reducible_resolution(spec: &ReducibleCurveSpec) -> Result<FreeComplex, CurveError> {
    let field = spec.field();
    let x = Polynomial::var(field, Var::X);
    let y = Polynomial::var(field, Var::Y);
    let zero = Polynomial::zero(field);
    let (a, b, f, g, h) = (&spec.a, &spec.b, &spec.f, &spec.g, &spec.h);
    let (df, dg, dh) = (spec.d_f as i32, spec.d_g as i32, spec.d_h);

    let f0 = FreeGradedModule::from_degrees(vec![0]);
    let f1 = FreeGradedModule::from_degrees(vec![2, df + dh + 1, dg + dh + 1, df + dg + dh]);
    let f2 = FreeGradedModule::from_degrees(vec![df + dh + 2, dg + dh + 2, df + dg + dh + 1, df + dg + dh + 1]);
    let f3 = FreeGradedModule::from_degrees(vec![df + dg + dh + 2]);

    let phi1 = vec![spec.generators().to_vec()];
    let phi2 = vec![
        vec![&(&x * a) + &(h * f), &(&y * b) + &(h * g), a * g, b * f],
        vec![-&y, zero.clone(), zero.clone(), g.clone()],
        vec![zero.clone(), -&x, f.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), -&y, -&x],
    ];
    let phi3 = vec![vec![g.clone()], vec![-f], vec![-&x], vec![y.clone()]];

    let maps = vec![
        GradedMap::new(field, f1.clone(), f0, phi1)?,
        GradedMap::new(field, f2.clone(), f1, phi2)?,
        GradedMap::new(field, f3, f2, phi3)?,
    ];
    Ok(FreeComplex::new(maps)?)
}

/// Hilbert function of `K[z, t]/(F, G)` moved up by `d_h`: the coefficients
/// of `s^{d_h} (1 + ... + s^{d_F - 1})(1 + ... + s^{d_G - 1})`.
pub fn expected_rao_dims(spec: &ReducibleCurveSpec) -> BTreeMap<i32, usize> {
    let mut dims = BTreeMap::new();
    for i in 0..spec.d_f as i32 {
        for j in 0..spec.d_g as i32 {
            *dims.entry(i + j + spec.d_h).or_insert(0) += 1;
        }
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{
        buchsbaum_eisenbud_check, is_minimal_complex, rao_in_window, rao_module, verify_complex, HomologyError,
    };
    use crate::poly::q;

    fn spec(a: &str, b: &str, f: &str, g: &str, h: &str) -> Result<ReducibleCurveSpec, CurveError> {
        ReducibleCurveSpec::new(q(a), q(b), q(f), q(g), q(h))
    }

    #[test]
    fn generators_in_order() {
        let s = spec("z", "t", "z", "t", "0").unwrap();
        assert_eq!(s.d_h(), 1);
        let i = build_reducible_ideal(&s);
        let want = ["xy", "x^2z", "y^2t", "xzt + yzt"].map(q);
        assert_eq!(i.generators(), &want);

        let c = spec("z", "t", "z^2", "t^2", "1").unwrap();
        let want = ["xy", "x^2z + xz^2", "y^2t + yt^2", "xzt^2 + yz^2t + z^2t^2"].map(q);
        assert_eq!(build_reducible_ideal(&c).generators(), &want);
    }

    #[test]
    fn invariant_violations_are_named() {
        assert!(matches!(spec("z", "t", "z", "z", "0"), Err(CurveError::NotRegularSequence(_))));
        assert!(matches!(spec("0", "t", "z", "t", "0"), Err(CurveError::AbZeroWithHZero)));
        assert!(matches!(spec("y", "t", "z", "t", "0"), Err(CurveError::WrongVariableSupport(_))));
        assert!(matches!(spec("z", "t", "z", "t", "1"), Err(CurveError::WrongDegrees(_))));
        assert!(matches!(spec("z", "t", "1", "t", "0"), Err(CurveError::ConstantForm(_))));
        assert!(matches!(spec("z", "t", "z", "t", "x"), Err(CurveError::WrongVariableSupport(_))));
        assert!(matches!(spec("z + 1", "t", "z", "t", "0"), Err(CurveError::NotHomogeneous(_))));
    }

    #[test]
    fn last_map_is_the_kernel_of_the_middle_one() {
        let s = spec("z^2", "t", "z^2", "t", "z").unwrap();
        let res = predicted_reducible_resolution(&s).unwrap();
        assert_eq!(res.map(3).entries(), &[vec![q("t")], vec![q("-z^2")], vec![q("-x")], vec![q("y")]]);
        assert!(verify_complex(&res));
    }

    #[test]
    fn lowest_degree_double_line() {
        let s = spec("1", "1", "z", "t", "0").unwrap();
        assert_eq!((s.d_h(), s.degree()), (0, 2));
        let res = predicted_reducible_resolution(&s).unwrap();
        let twists: Vec<Vec<i32>> = res.modules().iter().map(|m| m.twists()).collect();
        assert_eq!(twists, vec![vec![0], vec![-2; 4], vec![-3; 4], vec![-4]]);
        let i = build_reducible_ideal(&s);
        assert_eq!(rao_module(&i, &res).unwrap().dims(), &BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn resolution_is_certified() {
        let s = spec("xz + z^2", "yt + t^2", "z^2", "t^2", "z").unwrap();
        assert_eq!(s.degree(), 6);
        let i = build_reducible_ideal(&s);
        assert_eq!(i.hilbert_data().unwrap().degree, 6);
        let res = predicted_reducible_resolution(&s).unwrap();
        assert!(verify_complex(&res));
        assert!(is_minimal_complex(&res));
        assert!(buchsbaum_eisenbud_check(&res).unwrap().passed());
        let rao = rao_module(&i, &res).unwrap();
        assert_eq!(rao.dims(), &expected_rao_dims(&s));
        assert_eq!(rao.total_dimension(), 4);
        assert_eq!(rao_in_window(&res, (-6, 10)).unwrap().dims(), rao.dims());
        assert!(matches!(rao_in_window(&res, (2, 10)), Err(HomologyError::WindowTooSmall { .. })));
    }
}

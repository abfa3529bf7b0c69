//! Minimal curves with cyclic Rao module `R/(x, p, F, G)`.

use crate::ideal::{is_regular_sequence, Ideal};
use crate::poly::{Polynomial, Var};

use super::CurveError;

/// The curve `(x^2, xp, p^2 h, phF + xG)` together with both sides of
/// `(x^2, xp, p^2 h, phF + xG) = (x^2, xp, p^2, phF + xG) ∩ (x, h)`.
#[derive(Clone, Debug)]
pub struct TypeICurve {
    pub ideal: Ideal,
    pub double_structure: Ideal,
    pub residual: Ideal,
    pub intersection: Ideal,
    pub identity_holds: bool,
}

fn deg(p: &Polynomial) -> i64 {
    p.total_degree().map_or(-1, |d| d as i64)
}

pub fn type_i_minimal_curve(
    p: &Polynomial,
    h: &Polynomial,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<TypeICurve, CurveError> {
    let field = p.field();
    if [h, f, g].iter().any(|q| q.field() != field) {
        return Err(CurveError::FieldMismatch);
    }
    for (name, q) in [("p", p), ("F", f), ("G", g)] {
        if q.is_constant() {
            return Err(CurveError::ConstantForm(name.into()));
        }
    }
    if h.is_zero() {
        return Err(CurveError::NotRegularSequence("x, p, 0, G".into()));
    }
    let want = deg(g) - deg(f) - deg(p) + 1;
    if deg(h) != want {
        return Err(CurveError::WrongDegrees(format!("deg h = {} but deg G - deg F - deg p + 1 = {want}", deg(h))));
    }
    let x = Polynomial::var(field, Var::X);
    let hf = h * f;
    if !is_regular_sequence(&[x.clone(), p.clone(), hf.clone(), g.clone()]) {
        return Err(CurveError::NotRegularSequence(format!("x, {p}, {hf}, {g}")));
    }
    let x2 = &x * &x;
    let xp = &x * p;
    let p2 = p * p;
    let last = &(p * &hf) + &(&x * g);
    let ideal = Ideal::new(field, vec![x2.clone(), xp.clone(), &p2 * h, last.clone()]).expect("one field");
    let double_structure = Ideal::new(field, vec![x2, xp, p2, last]).expect("one field");
    let residual = Ideal::new(field, vec![x, h.clone()]).expect("one field");
    let intersection = double_structure.intersection(&residual);
    let identity_holds = ideal.equals(&intersection);
    Ok(TypeICurve { ideal, double_structure, residual, intersection, identity_holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::classify_curve;
    use crate::poly::q;

    #[test]
    fn identity_with_inhomogeneous_h() {
        let c = type_i_minimal_curve(&q("y"), &q("z + t^2"), &q("z"), &q("t^3")).unwrap();
        assert!(c.identity_holds);
    }

    #[test]
    fn non_regular_data_is_rejected() {
        let e = type_i_minimal_curve(&q("y"), &q("t^2"), &q("z"), &q("t^3")).unwrap_err();
        assert!(matches!(e, CurveError::NotRegularSequence(_)), "{e}");
        let e = type_i_minimal_curve(&q("y"), &q("t"), &q("z"), &q("t^3")).unwrap_err();
        assert!(matches!(e, CurveError::WrongDegrees(_)), "{e}");
    }

    #[test]
    fn constant_h_gives_the_double_line() {
        let c = type_i_minimal_curve(&q("y"), &q("1"), &q("z"), &q("t")).unwrap();
        assert!(c.identity_holds);
        assert_eq!(c.ideal.generators(), &["x^2", "xy", "y^2", "yz + xt"].map(q));
        let r = classify_curve(&c.ideal).unwrap();
        assert!(r.extremal);
        assert_eq!((r.mu, r.degree, r.acm), (4, 2, Some(false)));
    }
}

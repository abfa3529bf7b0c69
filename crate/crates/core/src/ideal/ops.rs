use crate::poly::{Monomial, Polynomial, TermOrder};

use super::{groebner, Ideal, IdealError};

/// Hard cap on quotient steps in [`Ideal::saturation`].
pub const SATURATION_CAP: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Quotient,
}

impl Ideal {
    pub fn apply(&self, other: &Ideal, op: IdealOp) -> Result<Ideal, IdealError> {
        if self.field != other.field {
            return Err(IdealError::FieldMismatch);
        }
        Ok(match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Quotient => self.quotient(other),
        })
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.field, gens).expect("same field")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let p = f * g;
                if !p.is_zero() && !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(self.field, gens).expect("same field")
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.field);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `I ∩ J` as the `w`-free part of `w·I + (1 − w)·J` under an order
    /// eliminating the auxiliary variable `w`.
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(f);
        }
        let w = Polynomial::monomial(f, Monomial::aux());
        let one_minus_w = &Polynomial::one(f) - &w;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| &w * g).collect();
        gens.extend(other.generators.iter().map(|g| &one_minus_w * g));
        let basis: Vec<Polynomial> =
            groebner(f, TermOrder::EliminateAux, &gens).iter().map(|p| p.to_poly(f)).filter(|p| !p.has_aux()).collect();
        // The w-free part is the reduced grevlex basis of the intersection:
        // on w-free monomials the elimination order agrees with grevlex.
        Ideal::with_grevlex_basis(f, basis)
    }

    /// `I : g = (I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Ideal {
        let f = self.field;
        if g.is_zero() {
            return Ideal::unit(f);
        }
        let inter = self.intersection(&Ideal::new(f, vec![g.clone()]).expect("same field"));
        let basis: Vec<Polynomial> = inter
            .groebner_basis(crate::poly::MonomialOrder::Grevlex)
            .iter()
            .map(|h| h.div_exact(g).expect("elements of (g) are divisible by g").monic())
            .collect();
        Ideal::new(f, basis).expect("same field")
    }

    /// `I : J = ∩_j (I : g_j)` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in other.generators.iter().filter(|g| !g.is_zero()) {
            let q = self.quotient_by(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(self.field))
    }

    /// `I : J^∞`, by iterated quotients until the ideal stops growing.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_CAP {
            let next = cur.quotient(other);
            if cur.contains_ideal(&next) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(IdealError::SaturationCap(SATURATION_CAP))
    }

    /// Saturation with respect to the irrelevant ideal (x, y, z, t).
    pub fn saturate(&self) -> Result<Ideal, IdealError> {
        self.saturation(&Ideal::maximal(self.field))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::tests::ideal;
    use crate::poly::{q, FieldSpec, Var};
    use proptest::prelude::*;

    #[test]
    fn reducible_quotient_by_x() {
        // A = z, B = t, F = z, G = t, h = 0
        let i = ideal(&["xy", "x^2z", "y^2t", "xzt + yzt"]);
        assert!(i.quotient_by(&q("x")).equals(&ideal(&["y", "xz"])));
    }

    #[test]
    fn case_two_one_identity() {
        // (x, yB + G) ∩ (y, xA + F) with A = z, B = t, F = z, G = t and h = 1
        let lhs = ideal(&["x", "yt + t"]).intersection(&ideal(&["y", "xz + z"]));
        let rhs = ideal(&["xy", "x^2z + xz", "y^2t + yt", "xzt + yzt + zt"]);
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn intersection_is_idempotent() {
        let i = ideal(&["x", "y"]);
        assert!(i.intersection(&i).equals(&i));
    }

    #[test]
    fn skew_lines() {
        let i = ideal(&["x", "y"]).intersection(&ideal(&["z", "t"]));
        assert!(i.equals(&ideal(&["xz", "xt", "yz", "yt"])));
    }

    #[test]
    fn saturations() {
        let sq = ideal(&["x^2", "xy", "y^2"]);
        assert!(sq.saturation(&ideal(&["x", "y"])).unwrap().is_unit());
        let i = ideal(&["xz - yt", "x^2", "xy", "y^2"]);
        assert!(i.saturation(&Ideal::unit(i.field())).unwrap().equals(&i));
        // (x^2, xy, xz, xt) = (x) ∩ (x^2, y, z, t): the embedded point goes away
        let e = ideal(&["x^2", "xy", "xz", "xt"]);
        assert!(e.saturate().unwrap().equals(&ideal(&["x"])));
        // (x, y, yB + hG, xA + hF) with A = z, B = t, F = z, G = t, h = z + t
        let fixture = ideal(&["x", "y", "yt + zt + t^2", "xz + z^2 + zt"]);
        let s1 = fixture.saturate().unwrap();
        assert!(s1.saturate().unwrap().equals(&s1));
    }

    #[test]
    fn quotient_by_zero_and_unit() {
        let i = ideal(&["x", "y"]);
        assert!(i.quotient(&Ideal::zero(i.field())).is_unit());
        assert!(i.quotient(&Ideal::unit(i.field())).equals(&i));
    }

    fn lin() -> impl Strategy<Value = Polynomial> {
        proptest::array::uniform4(-2i64..=2).prop_map(|c| {
            let f = FieldSpec::Rationals;
            Var::ALL
                .iter()
                .zip(c)
                .fold(Polynomial::zero(f), |acc, (v, k)| acc + Polynomial::var(f, *v).scale(&f.from_int(k)))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn colon_properties(a in lin(), b in lin(), c in lin()) {
            let i = Ideal::from_generators(vec![&a * &b, &(&c * &c) * &a]).unwrap();
            let j = Ideal::from_generators(vec![a.clone(), c.clone()]).unwrap();
            let col = i.quotient(&j);
            prop_assert!(col.product(&j).generators().iter().all(|g| i.contains(g)));
            prop_assert!(col.contains_ideal(&i));
            let s = i.saturation(&j).unwrap();
            prop_assert!(s.saturation(&j).unwrap().equals(&s));
        }
    }
}

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::field::{FieldSpec, Scalar};
use super::monomial::{Monomial, MonomialOrder, Var, NVARS};
use super::PolyError;

/// Sparse polynomial over an exact field. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

/// Outcome of a homogeneity test. The zero polynomial is homogeneous with no
/// degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }
}

impl Polynomial {
    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::term(field, Scalar::one(), Monomial::one())
    }

    pub fn constant(field: FieldSpec, c: i64) -> Self {
        Self::term(field, field.from_int(c), Monomial::one())
    }

    pub fn var(field: FieldSpec, v: Var) -> Self {
        Self::term(field, Scalar::one(), Monomial::var(v))
    }

    /// `c * m`; `c` must already be canonical for `field`.
    pub fn term(field: FieldSpec, c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, terms }
    }

    pub fn monomial(field: FieldSpec, m: Monomial) -> Self {
        Self::term(field, Scalar::one(), m)
    }

    /// Builds a polynomial from arbitrary rational terms, canonicalizing
    /// coefficients and merging repeated monomials.
    pub fn from_terms<I>(field: FieldSpec, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Polynomial::zero(field);
        for (m, c) in terms {
            let c = field.element(c)?;
            p.add_term(m, &c);
        }
        Ok(p)
    }

    pub(crate) fn from_map(field: FieldSpec, terms: BTreeMap<Monomial, Scalar>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { field, terms }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)).map(|(m, c)| (*m, c.clone()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneity().is_homogeneous()
    }

    /// True when no term involves any of `vars`.
    pub fn avoids(&self, vars: &[Var]) -> bool {
        self.terms.keys().all(|m| vars.iter().all(|v| !m.involves(*v)))
    }

    pub(crate) fn has_aux(&self) -> bool {
        self.terms.keys().any(|m| m.aux_degree() > 0)
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let f = self.field;
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = f.add(existing, c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_field(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_field(other)?;
        let f = self.field;
        let mut out = Polynomial::zero(f);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(*m1 + *m2, &f.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        let f = self.field;
        let terms = self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect();
        Polynomial { field: f, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|(n, c)| (*n + *m, c.clone())).collect();
        Polynomial { field: self.field, terms }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient (grevlex). Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term(MonomialOrder::Grevlex) {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field.inv(&c)),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::Grevlex;
        let (lm, lc) = d.leading_term(order)?;
        let inv = self.field.inv(&lc);
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.field);
        while let Some((m, c)) = rem.leading_term(order) {
            let q = m.checked_div(&lm)?;
            let coef = self.field.mul(&c, &inv);
            quo.add_term(q, &coef);
            let sub = d.mul_monomial(&q).scale(&coef);
            rem = &rem - &sub;
        }
        Some(quo)
    }

    /// Replaces each variable by a polynomial (`images[i]` for variable `i`).
    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> Polynomial {
        let f = self.field;
        let mut out = Polynomial::zero(f);
        for (m, c) in &self.terms {
            let mut t = Polynomial::term(f, c.clone(), Monomial::one());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponents()[i];
                if e > 0 {
                    t = &t * &img.pow(e as u32);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Linear change of coordinates: variable `i` becomes
    /// `sum_j m[i][j] * var_j`. The matrix must be invertible.
    pub fn apply_linear_substitution(&self, m: &[[Scalar; NVARS]; NVARS]) -> Result<Polynomial, PolyError> {
        let images = linear_images(self.field, m)?;
        Ok(self.substitute(&images))
    }

    pub fn map_terms_to_field(&self, field: FieldSpec) -> Result<Polynomial, PolyError> {
        Polynomial::from_terms(field, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    /// Value at a point of `(Z/pZ)^4`; `None` if a coefficient's denominator
    /// vanishes mod `p`.
    pub fn eval_mod(&self, point: &[u64; NVARS], p: u64) -> Option<u64> {
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let mut v = super::field::residue_mod(c, p)? as u128;
            for (i, e) in m.exponents().iter().enumerate() {
                for _ in 0..*e {
                    v = v * point[i] as u128 % p as u128;
                }
            }
            acc = (acc + v) % p as u128;
        }
        Some(acc as u64)
    }
}

/// Images of the variables under a linear substitution matrix.
pub fn linear_images(field: FieldSpec, m: &[[Scalar; NVARS]; NVARS]) -> Result<[Polynomial; NVARS], PolyError> {
    let rows: Vec<Vec<Scalar>> = m
        .iter()
        .map(|r| r.iter().map(|c| field.element(c.clone())).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    if crate::linalg::dense_rank(field, &rows) < NVARS {
        return Err(PolyError::SingularSubstitution);
    }
    Ok(std::array::from_fn(|i| {
        let mut p = Polynomial::zero(field);
        for (j, v) in Var::ALL.iter().enumerate() {
            p.add_term(Monomial::var(*v), &rows[i][j]);
        }
        p
    }))
}

impl Zero for Polynomial {
    /// Rational zero; use [`Polynomial::zero`] with an explicit field elsewhere.
    fn zero() -> Self {
        Polynomial::zero(FieldSpec::Rationals)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live over different fields; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial field mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let f = self.field;
        let terms = self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect();
        Polynomial { field: f, terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;
    use num_rational::BigRational;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, Q).unwrap()
    }

    fn s(v: i64) -> Scalar {
        BigRational::from_integer(v.into())
    }

    fn perm(a: usize, b: usize) -> [[Scalar; 4]; 4] {
        let mut m: [[Scalar; 4]; 4] =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { s(1) } else { s(0) }));
        m.swap(a, b);
        m
    }

    #[test]
    fn binomial_square_and_inverse() {
        assert_eq!(&p("x+y") * &p("x+y"), p("x^2 + 2xy + y^2"));
        assert!((&p("xz - yt") + &p("yt - xz")).is_zero());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let f7 = FieldSpec::prime(7).unwrap();
        let a = parse_poly("x", f7).unwrap();
        assert!(matches!(a.checked_add(&p("x")), Err(PolyError::FieldMismatch(..))));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("xz - yt").homogeneity(), Homogeneity::Homogeneous(2));
        assert_eq!(p("x^2 + y").homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(p("x^2z + xzt").homogeneity(), Homogeneity::Homogeneous(3));
        assert_eq!(p("0").homogeneity(), Homogeneity::Zero);
    }

    #[test]
    fn substitutions() {
        assert_eq!(p("xy").apply_linear_substitution(&perm(0, 2)).unwrap(), p("zy"));
        assert_eq!(p("xz - yt").apply_linear_substitution(&perm(1, 1)).unwrap(), p("xz - yt"));
        let mut m = perm(0, 0);
        m[0][1] = s(1);
        assert_eq!(p("x^2").apply_linear_substitution(&m).unwrap(), p("x^2 + 2xy + y^2"));
        let mut singular = perm(0, 0);
        singular[1] = singular[0].clone();
        assert_eq!(p("x").apply_linear_substitution(&singular), Err(PolyError::SingularSubstitution));
    }

    #[test]
    fn exact_division() {
        let f = &p("x^2 - y^2") * &p("z + t");
        assert_eq!(f.div_exact(&p("x - y")).unwrap(), &p("x + y") * &p("z + t"));
        assert!(p("x^2 + y").div_exact(&p("x")).is_none());
    }

    #[test]
    fn residue_mod_xy_matches_hand_expansion() {
        // (yB + G)(xA + F) with A = z, B = t, F = z, G = t, dropping multiples of xy
        let prod = &p("yt + t") * &p("xz + z");
        let kept: Vec<(Monomial, Scalar)> = prod
            .terms()
            .filter(|(m, _)| !(m.involves(Var::X) && m.involves(Var::Y)))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        assert_eq!(Polynomial::from_terms(Q, kept).unwrap(), p("xzt + yzt + zt"));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::array::uniform4(0u16..3), -3i64..=3), 0..5)
            .prop_map(|ts| Polynomial::from_terms(Q, ts.into_iter().map(|(e, c)| (Monomial::new(e), s(c)))).unwrap())
    }

    fn homogeneous_poly(deg: u32) -> impl Strategy<Value = Polynomial> {
        let basis = Monomial::all_of_degree(deg);
        proptest::collection::vec(-2i64..=2, basis.len())
            .prop_map(move |cs| Polynomial::from_terms(Q, basis.iter().copied().zip(cs.into_iter().map(s))).unwrap())
    }

    fn invertible() -> impl Strategy<Value = [[Scalar; 4]; 4]> {
        proptest::array::uniform16(-2i64..=2)
            .prop_map(|v| std::array::from_fn(|i| std::array::from_fn(|j| s(v[4 * i + j]))))
            .prop_filter("invertible", |m| {
                let rows: Vec<Vec<Scalar>> = m.iter().map(|r| r.to_vec()).collect();
                crate::linalg::dense_rank(Q, &rows) == 4
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn substitution_is_multiplicative(
            f in homogeneous_poly(2), g in homogeneous_poly(1), m in invertible()
        ) {
            let lhs = (&f * &g).apply_linear_substitution(&m).unwrap();
            let rhs = &f.apply_linear_substitution(&m).unwrap() * &g.apply_linear_substitution(&m).unwrap();
            prop_assert_eq!(lhs.clone(), rhs);
            prop_assert!(lhs.is_homogeneous());
        }
    }
}

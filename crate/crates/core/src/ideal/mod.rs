//! Ideals of K[x, y, z, t]: Gröbner bases, membership, the ideal operations
//! the curve constructions rely on, Hilbert data and minimal generator
//! counts.

mod generators;
mod groebner;
mod hilbert;
mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

pub use generators::{degree_part, is_regular_sequence, MinimalGenerators};
pub use hilbert::{monomial_hilbert_numerator, HilbertData};

pub(crate) use groebner::{groebner, normal_form, OrdPoly};

use crate::poly::{FieldSpec, MonomialOrder, Polynomial, TermOrder, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("generators live over different fields")]
    FieldMismatch,
    #[error("operation requires homogeneous generators")]
    NotHomogeneous,
    #[error("the zero ideal has no finite degree")]
    ZeroIdeal,
    #[error("saturation did not stabilize within {0} quotient steps")]
    SaturationCap(usize),
    #[error("not a curve: R/I has Krull dimension {0}, expected 2")]
    NotACurve(i32),
}

/// An ideal given by generators, with reduced Gröbner bases cached per
/// monomial order. The cache is write-once per order; concurrent fills
/// compute identical bases, and the first insert wins.
pub struct Ideal {
    field: FieldSpec,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("ideal cache poisoned").clone();
        Ideal { field: self.field, generators: self.generators.clone(), cache: RwLock::new(cache) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(field: FieldSpec, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        if generators.iter().any(|g| g.field() != field) {
            return Err(IdealError::FieldMismatch);
        }
        Ok(Ideal { field, generators, cache: RwLock::new(HashMap::new()) })
    }

    /// Ideal over the field of the first generator (rationals when empty).
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        let field = generators.first().map(|g| g.field()).unwrap_or_default();
        Ideal::new(field, generators)
    }

    pub fn unit(field: FieldSpec) -> Self {
        Ideal::new(field, vec![Polynomial::one(field)]).unwrap()
    }

    pub fn zero(field: FieldSpec) -> Self {
        Ideal::new(field, Vec::new()).unwrap()
    }

    /// The irrelevant ideal (x, y, z, t).
    pub fn maximal(field: FieldSpec) -> Self {
        Ideal::new(field, Var::ALL.iter().map(|v| Polynomial::var(field, *v)).collect()).unwrap()
    }

    pub(crate) fn with_grevlex_basis(field: FieldSpec, basis: Vec<Polynomial>) -> Self {
        let ideal = Ideal::new(field, basis.clone()).unwrap();
        ideal.cache.write().unwrap().insert(MonomialOrder::Grevlex, Arc::new(basis));
        ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis in `order`: monic, sorted by leading monomial
    /// descending, hence canonical for the ideal.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<Vec<Polynomial>> {
        if let Some(b) = self.cache.read().expect("ideal cache poisoned").get(&order) {
            return Arc::clone(b);
        }
        let basis: Vec<Polynomial> = groebner(self.field, TermOrder::Public(order), &self.generators)
            .iter()
            .map(|p| p.to_poly(self.field))
            .collect();
        let mut cache = self.cache.write().expect("ideal cache poisoned");
        Arc::clone(cache.entry(order).or_insert_with(|| Arc::new(basis)))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let order = TermOrder::Public(MonomialOrder::Grevlex);
        let gb = self.groebner_basis(MonomialOrder::Grevlex);
        let ords: Vec<OrdPoly> = gb.iter().map(|g| OrdPoly::from_poly(g, order)).collect();
        let refs: Vec<&OrdPoly> = ords.iter().collect();
        normal_form(self.field, order, OrdPoly::from_poly(f, order), &refs).to_poly(self.field)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis(MonomialOrder::Grevlex);
        gb.len() == 1 && gb[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    /// Ideal equality, certified by equal reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.field == other.field
            && *self.groebner_basis(MonomialOrder::Grevlex) == *other.groebner_basis(MonomialOrder::Grevlex)
    }

    /// Leading monomials of the reduced grevlex basis.
    pub fn initial_monomials(&self) -> Vec<crate::poly::Monomial> {
        self.groebner_basis(MonomialOrder::Grevlex)
            .iter()
            .filter_map(|g| g.leading_term(MonomialOrder::Grevlex).map(|(m, _)| m))
            .collect()
    }
}

//! Degreewise linear algebra on homogeneous ideals: graded pieces, minimal
//! generator counts and regular sequences.

use std::collections::BTreeMap;

use crate::linalg::{Echelon, SparseVec};
use crate::poly::{FieldSpec, Monomial, Polynomial, Var};

use super::{Ideal, IdealError};

fn to_vec(p: &Polynomial) -> SparseVec<Monomial> {
    p.terms().map(|(m, c)| (*m, c.clone())).collect()
}

fn to_poly(field: FieldSpec, v: &SparseVec<Monomial>) -> Polynomial {
    Polynomial::from_terms(field, v.iter().map(|(m, c)| (*m, c.clone()))).expect("canonical coefficients")
}

/// Span of `{x_i * v}` for the rows of `e`, as a fresh echelon basis.
fn times_linear(field: FieldSpec, e: &Echelon<Monomial>) -> Echelon<Monomial> {
    let mut out = Echelon::new(field);
    for row in e.rows() {
        for v in Var::ALL {
            let m = Monomial::var(v);
            out.insert(row.iter().map(|(k, c)| (*k + m, c.clone())).collect());
        }
    }
    out
}

/// A basis of the degree-`j` piece `I_j` of a homogeneous ideal.
pub fn degree_part(ideal: &Ideal, j: u32) -> Vec<Polynomial> {
    let field = ideal.field();
    let mut e: Echelon<Monomial> = Echelon::new(field);
    for g in ideal.generators().iter().filter(|g| !g.is_zero()) {
        let Some(dg) = g.total_degree() else { continue };
        if dg > j {
            continue;
        }
        let v = to_vec(g);
        for m in Monomial::all_of_degree(j - dg) {
            e.insert(v.iter().map(|(k, c)| (*k + m, c.clone())).collect());
        }
    }
    e.rows().map(|r| to_poly(field, r)).collect()
}

/// `μ(I)`, the number of minimal generators in each degree, and a minimal
/// generating set drawn from the given generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalGenerators {
    pub total: usize,
    pub by_degree: BTreeMap<u32, usize>,
    pub generators: Vec<Polynomial>,
}

impl Ideal {
    /// Counts `dim I_j - dim R_1 I_{j-1}` degree by degree up to the largest
    /// generator degree.
    pub fn minimal_generator_count(&self) -> Result<MinimalGenerators, IdealError> {
        if !self.is_homogeneous() {
            return Err(IdealError::NotHomogeneous);
        }
        let field = self.field();
        let gens: Vec<&Polynomial> = self.generators().iter().filter(|g| !g.is_zero()).collect();
        let mut by_degree = BTreeMap::new();
        let mut minimal = Vec::new();
        let Some(lo) = gens.iter().filter_map(|g| g.total_degree()).min() else {
            return Ok(MinimalGenerators { total: 0, by_degree, generators: minimal });
        };
        let hi = gens.iter().filter_map(|g| g.total_degree()).max().unwrap();
        let mut piece: Echelon<Monomial> = Echelon::new(field);
        for j in lo..=hi {
            let mut next = if j == lo { Echelon::new(field) } else { times_linear(field, &piece) };
            let mut fresh = 0;
            for g in gens.iter().filter(|g| g.total_degree() == Some(j)) {
                if next.insert(to_vec(g)) {
                    fresh += 1;
                    minimal.push((*g).clone());
                }
            }
            if fresh > 0 {
                by_degree.insert(j, fresh);
            }
            piece = next;
        }
        Ok(MinimalGenerators { total: minimal.len(), by_degree, generators: minimal })
    }
}

/// Whether `fs` is a regular sequence in R. Homogeneous nonconstant input is
/// decided by `codim (f_1, ..., f_k) = k`; otherwise every colon
/// `(f_1, ..., f_i) : f_{i+1}` is compared with `(f_1, ..., f_i)`.
pub fn is_regular_sequence(fs: &[Polynomial]) -> bool {
    let Some(first) = fs.first() else {
        return true;
    };
    let field = first.field();
    if fs.iter().any(|f| f.field() != field || f.is_zero()) {
        return false;
    }
    let full = Ideal::new(field, fs.to_vec()).expect("fields checked");
    if full.is_unit() {
        return false;
    }
    if fs.iter().all(|f| f.is_homogeneous() && !f.is_constant()) {
        return full.codimension() == Some(fs.len() as i32);
    }
    for i in 1..fs.len() {
        let prefix = Ideal::new(field, fs[..i].to_vec()).expect("fields checked");
        if !prefix.contains_ideal(&prefix.quotient_by(&fs[i])) {
            return false;
        }
    }
    true
}

//! Exact linear algebra over a [`FieldSpec`] on sparse vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{FieldSpec, Scalar};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incrementally built semi-echelon basis. Each stored row is monic with a
/// distinct leading (smallest) key, which is enough for rank, membership
/// and reduction modulo the span.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    field: FieldSpec,
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(field: FieldSpec) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    /// Reduces `v` against the basis until its leading key is not a pivot.
    /// Only the leading part is cleared; trailing entries may still lie in
    /// the span's pivot columns.
    fn reduce_lead(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        loop {
            let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            match self.rows.get(&k) {
                Some(row) => axpy(self.field, &mut v, &self.field.neg(&c), row),
                None => return v,
            }
        }
    }

    /// Fully reduced remainder of `v` modulo the span: no entry of the
    /// result sits on a pivot key.
    pub fn reduce(&self, v: SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::new();
        let mut v = v;
        loop {
            v = self.reduce_lead(v);
            let Some((k, c)) = v.pop_first() else {
                return out;
            };
            out.insert(k, c);
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce_lead(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let v = self.reduce_lead(v);
        let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = self.field.inv(&c);
        let row = if inv.is_one() { v } else { v.into_iter().map(|(k, x)| (k, self.field.mul(&x, &inv))).collect() };
        self.rows.insert(k, row);
        true
    }
}

/// `v += a * w`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(field: FieldSpec, v: &mut SparseVec<K>, a: &Scalar, w: &SparseVec<K>) {
    for (k, x) in w {
        let add = field.mul(a, x);
        match v.get_mut(k) {
            Some(e) => {
                let s = field.add(e, &add);
                if s.is_zero() {
                    v.remove(k);
                } else {
                    *e = s;
                }
            }
            None => {
                if !add.is_zero() {
                    v.insert(k.clone(), add);
                }
            }
        }
    }
}

/// Rank of a dense matrix given as rows.
pub fn dense_rank(field: FieldSpec, rows: &[Vec<Scalar>]) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        let v: SparseVec<usize> =
            r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        e.insert(v);
    }
    e.rank()
}

/// Tagged key used by [`nullspace`]: data coordinates sort before tags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Tagged<K> {
    Data(K),
    Tag(usize),
}

/// Basis of `{c : sum_i c_i v_i = 0}` for the given vectors, each basis
/// element given as a dense coefficient list.
pub fn nullspace<K: Ord + Clone>(field: FieldSpec, vectors: &[SparseVec<K>]) -> Vec<Vec<Scalar>> {
    let mut e: Echelon<Tagged<K>> = Echelon::new(field);
    for (i, v) in vectors.iter().enumerate() {
        let mut t: SparseVec<Tagged<K>> = v.iter().map(|(k, c)| (Tagged::Data(k.clone()), c.clone())).collect();
        t.insert(Tagged::Tag(i), Scalar::one());
        e.insert(t);
    }
    e.rows()
        .filter(|r| matches!(r.keys().next(), Some(Tagged::Tag(_))))
        .map(|r| {
            let mut c = vec![Scalar::zero(); vectors.len()];
            for (k, x) in r {
                if let Tagged::Tag(i) = k {
                    c[*i] = x.clone();
                }
            }
            c
        })
        .collect()
}

/// Rank of a dense matrix over `Z/pZ` (entries already reduced).
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let pm = p as u128;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = (rows[r][col] as u128 * inv as u128 % pm) as u64;
                for c in col..ncols {
                    let sub = (factor as u128 * rows[rank][c] as u128 % pm) as u64;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn s(v: i64) -> Scalar {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn rank_and_nullspace() {
        let q = FieldSpec::Rationals;
        let rows = vec![vec![s(1), s(2), s(3)], vec![s(2), s(4), s(6)], vec![s(0), s(1), s(1)]];
        assert_eq!(dense_rank(q, &rows), 2);
        let vecs: Vec<SparseVec<usize>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
            .collect();
        let ns = nullspace(q, &vecs);
        assert_eq!(ns.len(), 1);
        for col in 0..3 {
            let total: Scalar = (0..3).map(|i| &ns[0][i] * &rows[i][col]).sum();
            assert!(total.is_zero());
        }
    }

    #[test]
    fn reduce_is_canonical_modulo_span() {
        let q = FieldSpec::Rationals;
        let mut e: Echelon<usize> = Echelon::new(q);
        e.insert([(0, s(1)), (1, s(1))].into_iter().collect());
        let a = e.reduce([(0, s(1))].into_iter().collect());
        let b = e.reduce([(1, s(-1))].into_iter().collect());
        assert_eq!(a, b);
    }

    #[test]
    fn modular_rank() {
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![3, 4]], 7), 2);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![3, 6]], 7), 1);
    }
}

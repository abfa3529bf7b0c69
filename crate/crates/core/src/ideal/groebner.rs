//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! normal selection strategy.
//!
//! Polynomials are converted to [`OrdPoly`], a term list sorted ascending by
//! the active order's key, so the leading term is the last entry and
//! subtracting a shifted multiple is a linear merge.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{FieldSpec, Monomial, OrderKey, Polynomial, Scalar, TermOrder};

#[derive(Clone, Debug)]
pub(crate) struct OrdPoly {
    terms: Vec<(OrderKey, Monomial, Scalar)>,
}

fn add_keys(a: &OrderKey, b: &OrderKey) -> OrderKey {
    std::array::from_fn(|i| a[i] + b[i])
}

impl OrdPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: TermOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (order.key(m), *m, c.clone())).collect();
        terms.sort_by_key(|a| a.0);
        OrdPoly { terms }
    }

    pub(crate) fn to_poly(&self, field: FieldSpec) -> Polynomial {
        Polynomial::from_map(field, self.terms.iter().map(|(_, m, c)| (*m, c.clone())).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").1
    }

    fn lc(&self) -> &Scalar {
        &self.terms.last().expect("leading coefficient of zero").2
    }

    fn monic(mut self, field: FieldSpec) -> Self {
        if self.is_zero() || self.lc().is_one() {
            return self;
        }
        let inv = field.inv(self.lc());
        for t in self.terms.iter_mut() {
            t.2 = field.mul(&t.2, &inv);
        }
        self
    }

    /// `self - c * q * g` where `kq = key(q)`.
    fn sub_shifted(&self, field: FieldSpec, c: &Scalar, q: &Monomial, kq: &OrderKey, g: &OrdPoly) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(k, m, x)| (add_keys(k, kq), *m + *q, x)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => x.0.cmp(&y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (k, m, x) = b.next().unwrap();
                    out.push((k, m, field.neg(&field.mul(c, x))));
                }
                Ordering::Equal => {
                    let (k, m, x0) = a.next().unwrap();
                    let (_, _, x1) = b.next().unwrap();
                    let v = field.sub(x0, &field.mul(c, x1));
                    if !v.is_zero() {
                        out.push((*k, *m, v));
                    }
                }
            }
        }
        OrdPoly { terms: out }
    }
}

/// Fully reduced normal form of `f` modulo monic polynomials `basis`.
pub(crate) fn normal_form(field: FieldSpec, order: TermOrder, f: OrdPoly, basis: &[&OrdPoly]) -> OrdPoly {
    let mut p = f;
    let mut rem = Vec::new();
    while let Some((_, m, c)) = p.terms.last() {
        let divisor = basis.iter().find(|g| g.lm().divides(m));
        match divisor {
            Some(g) => {
                let q = *m - *g.lm();
                let kq = order.key(&q);
                let c = c.clone();
                p = p.sub_shifted(field, &c, &q, &kq, g);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    OrdPoly { terms: rem }
}

fn s_polynomial(field: FieldSpec, order: TermOrder, f: &OrdPoly, g: &OrdPoly) -> OrdPoly {
    let l = f.lm().lcm(g.lm());
    let qf = l - *f.lm();
    let qg = l - *g.lm();
    let zero = OrdPoly { terms: Vec::new() };
    let a = zero.sub_shifted(field, &field.neg(&Scalar::one()), &qf, &order.key(&qf), f);
    a.sub_shifted(field, &Scalar::one(), &qg, &order.key(&qg), g)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    rank: (u32, OrderKey),
}

struct Builder {
    order: TermOrder,
    polys: Vec<OrdPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lm().lcm(self.polys[j].lm());
        Pair { i, j, lcm, rank: (lcm.degree(), self.order.key(&lcm)) }
    }

    fn update(&mut self, h: OrdPoly) {
        let hi = self.polys.len();
        let lm_h = *h.lm();
        self.polys.push(h);
        self.active.push(true);

        let mut cands: Vec<Pair> = (0..hi).filter(|&i| self.active[i]).map(|i| self.pair(i, hi)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let coprime = self.polys[p.i].lm().is_coprime(&lm_h);
            let dominated = cands.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.polys[p.i].lm().is_coprime(&lm_h));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let lcm_ih = polys[p.i].lm().lcm(&lm_h);
            let lcm_jh = polys[p.j].lm().lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm)
        });
        self.pairs.extend(kept);

        for i in 0..hi {
            if self.active[i] && lm_h.divides(self.polys[i].lm()) {
                self.active[i] = false;
            }
        }
    }

    fn active_refs(&self) -> Vec<&OrdPoly> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| self.pairs[a].rank.cmp(&self.pairs[b].rank))?;
        Some(self.pairs.swap_remove(idx))
    }
}

/// Reduced Gröbner basis, monic, sorted by leading monomial descending.
/// The unit ideal yields `[1]`; the zero ideal yields `[]`.
pub(crate) fn groebner(field: FieldSpec, order: TermOrder, gens: &[Polynomial]) -> Vec<OrdPoly> {
    let mut b = Builder { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut inputs: Vec<OrdPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| OrdPoly::from_poly(g, order)).collect();
    // low degree first keeps the interreduction cheap
    inputs.sort_by_key(|p| (p.lm().degree(), order.key(p.lm())));
    for f in inputs {
        let h = normal_form(field, order, f, &b.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return vec![h.monic(field)];
        }
        b.update(h.monic(field));
    }
    while let Some(p) = b.next_pair() {
        let s = s_polynomial(field, order, &b.polys[p.i], &b.polys[p.j]);
        let h = normal_form(field, order, s, &b.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return vec![h.monic(field)];
        }
        b.update(h.monic(field));
    }
    let minimal: Vec<OrdPoly> = b.active_refs().into_iter().cloned().collect();
    let mut reduced: Vec<OrdPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&OrdPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
            let lead = minimal[i].terms.last().unwrap().clone();
            let tail = OrdPoly { terms: minimal[i].terms[..minimal[i].terms.len() - 1].to_vec() };
            let mut r = normal_form(field, order, tail, &others);
            r.terms.push(lead);
            r
        })
        .collect();
    reduced.sort_by_key(|p| std::cmp::Reverse(order.key(p.lm())));
    reduced
}

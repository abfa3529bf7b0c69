use std::fmt;
use std::ops::{Add, Sub};

/// Number of public ring variables (x, y, z, t).
pub const NVARS: usize = 4;

/// Slot of the auxiliary elimination variable. It only ever appears inside
/// intersection computations and is eliminated before results escape.
pub(crate) const AUX: usize = 4;

const SLOTS: usize = 5;

pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z', 't'];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

/// A monomial in x, y, z, t. The derived `Ord` is a plain storage order
/// (lexicographic on the exponent array); use [`MonomialOrder`] for term
/// orders.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u16; SLOTS]);

impl Monomial {
    pub fn new(exps: [u16; NVARS]) -> Self {
        Monomial([exps[0], exps[1], exps[2], exps[3], 0])
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; SLOTS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub(crate) fn aux() -> Self {
        let mut e = [0; SLOTS];
        e[AUX] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u16; NVARS] {
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub(crate) fn slot(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub(crate) fn aux_degree(&self) -> u16 {
        self.0[AUX]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; SLOTS];
        for i in 0..SLOTS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; SLOTS];
        for i in 0..SLOTS {
            e[i] = self.0[i].max(other.0[i]);
        }
        Monomial(e)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; SLOTS];
        for i in 0..SLOTS {
            e[i] = self.0[i].min(other.0[i]);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut e = self.0;
        for x in e.iter_mut() {
            *x *= k;
        }
        Monomial(e)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.0[v.index()] > 0
    }

    /// All monomials of total degree `d` in x, y, z, t, grevlex-descending.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let d = d as u16;
        for a in 0..=d {
            for b in 0..=d - a {
                for c in 0..=d - a - b {
                    out.push(Monomial::new([a, b, c, d - a - b - c]));
                }
            }
        }
        let order = MonomialOrder::Grevlex;
        out.sort_by(|p, q| order.cmp(q, p));
        out
    }
}

impl Add for Monomial {
    type Output = Monomial;
    fn add(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for i in 0..SLOTS {
            e[i] += rhs.0[i];
        }
        Monomial(e)
    }
}

impl Sub for Monomial {
    type Output = Monomial;
    /// Panics unless `rhs` divides `self`.
    fn sub(self, rhs: Monomial) -> Monomial {
        self.checked_div(&rhs).expect("monomial division")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, name) in VAR_NAMES.iter().enumerate() {
            match self.0[i] {
                0 => {}
                1 => write!(f, "{name}")?,
                e => write!(f, "{name}^{e}")?,
            }
        }
        match self.0[AUX] {
            0 => Ok(()),
            1 => write!(f, "w"),
            e => write!(f, "w^{e}"),
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Term orders with variables ranked x > y > z > t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Block order eliminating the first `k` variables: compares the degree
    /// in those variables first, then breaks ties by grevlex.
    Elimination(usize),
}

/// Sort key whose lexicographic comparison realizes a term order. Every key
/// is linear in the exponent vector, so `key(a * b) = key(a) + key(b)`.
pub(crate) type OrderKey = [i32; 7];

/// Term orders used internally, including the auxiliary-variable
/// elimination order behind intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum TermOrder {
    Public(MonomialOrder),
    EliminateAux,
}

impl TermOrder {
    pub(crate) fn key(&self, m: &Monomial) -> OrderKey {
        let e: [i32; SLOTS] = std::array::from_fn(|i| m.0[i] as i32);
        let deg: i32 = e.iter().sum();
        match self {
            TermOrder::Public(MonomialOrder::Grevlex) => [deg, -e[4], -e[3], -e[2], -e[1], -e[0], 0],
            TermOrder::Public(MonomialOrder::Lex) => [e[0], e[1], e[2], e[3], e[4], 0, 0],
            TermOrder::Public(MonomialOrder::Elimination(k)) => {
                let k = (*k).min(NVARS);
                let block: i32 = e[..k].iter().sum();
                [block, deg, -e[4], -e[3], -e[2], -e[1], -e[0]]
            }
            TermOrder::EliminateAux => {
                let rest = deg - e[4];
                [e[4], rest, -e[3], -e[2], -e[1], -e[0], 0]
            }
        }
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        let o = TermOrder::Public(*self);
        o.key(a).cmp(&o.key(b))
    }

    pub fn parse(s: &str) -> Option<MonomialOrder> {
        match s {
            "grevlex" => Some(MonomialOrder::Grevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => {
                let k = s.strip_prefix("elim:")?.parse::<usize>().ok()?;
                (k <= NVARS).then_some(MonomialOrder::Elimination(k))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
        }
    }
}

//! Coefficient fields.
//!
//! Every coefficient is stored as a [`BigRational`]. Over a prime field the
//! stored value is always an integer in `[0, p)`, so equality of canonical
//! forms is plain structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::PolyError;

pub type Scalar = BigRational;

/// The prime used for randomized rank pre-checks (2^31 - 1).
pub const CHECK_PRIME: u64 = 2_147_483_647;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// A prime field. Characteristic 2 is refused because quadric ranks are
    /// computed from symmetric matrices with halved off-diagonal entries.
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if p <= 2 || !is_prime(p) {
            return Err(PolyError::InvalidPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Brings an arbitrary rational into canonical form for this field.
    pub fn element(&self, value: Scalar) -> Result<Scalar, PolyError> {
        match self {
            FieldSpec::Rationals => Ok(value),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                let den = value.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(PolyError::NotInvertible(value.to_string()));
                }
                let num = value.numer().mod_floor(&p);
                let inv = mod_inverse(&den, &p);
                Ok(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.reduce(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            FieldSpec::Rationals => a.recip(),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                BigRational::from_integer(mod_inverse(a.numer(), &p))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Residue of an integer-valued internal result. Inputs are already
    /// canonical, so only integer numerators occur over a prime field.
    fn reduce(&self, v: Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => v,
            FieldSpec::Prime(p) => {
                debug_assert!(v.is_integer());
                BigRational::from_integer(v.numer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    /// Symmetric representative used when printing prime-field coefficients.
    pub fn display_value(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a.clone(),
            FieldSpec::Prime(p) => {
                let half = BigInt::from(*p / 2);
                if a.numer() > &half {
                    BigRational::from_integer(a.numer() - BigInt::from(*p))
                } else {
                    a.clone()
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Image of a field element in `Z/pZ`, `None` when the denominator vanishes
/// modulo `p`.
pub fn residue_mod(a: &Scalar, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = a.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = a.numer().mod_floor(&pb);
    let inv = mod_inverse(&den, &pb);
    (num * inv).mod_floor(&pb).to_u64()
}

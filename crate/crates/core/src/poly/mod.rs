//! Exact arithmetic in K[x, y, z, t].

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{is_prime, residue_mod, FieldSpec, Scalar, CHECK_PRIME};
pub use monomial::{Monomial, MonomialOrder, Var, NVARS, VAR_NAMES};
pub use parse::{parse_poly, ParseError};
pub use polynomial::{linear_images, Homogeneity, Polynomial};

pub(crate) use monomial::{OrderKey, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("{0} is not invertible in the coefficient field")]
    NotInvertible(String),
    #[error("singular substitution matrix")]
    SingularSubstitution,
}

/// Shorthand used throughout tests and examples: parse over the rationals,
/// panicking on malformed input.
pub fn q(src: &str) -> Polynomial {
    parse_poly(src, FieldSpec::Rationals).unwrap_or_else(|e| panic!("bad polynomial {src:?}: {e}"))
}

//! The polynomial ring `K[x_ij, y_ij]`: coefficient fields, monomials,
//! monomial orders and canonical sparse polynomials.

mod field;
mod monomial;
mod order;
mod poly;
mod ring;
mod text;

use thiserror::Error;

pub use field::{is_prime, FieldKind, Scalar, DEFAULT_PRIME};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Polynomial, Term};
pub use ring::{MatrixVar, PolyRing, VariableTable};
pub use text::{format_monomial_in, format_poly, parse_poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operands live in different rings; convert one first")]
    RingMismatch,
    #[error("coefficient from a different field")]
    FieldMismatch,
    #[error("leading term of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unknown field '{0}' (expected 'rat', 'gfp' or 'gfp:P')")]
    UnknownField(String),
    #[error("matrix size must be at least 2, got {0}")]
    MatrixSize(usize),
    #[error("index [{i},{j}] outside 1..{n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable precedence is not a permutation")]
    BadPrecedence,
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

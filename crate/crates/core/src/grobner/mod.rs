//! Multivariate division, Buchberger's algorithm, reduced bases, normal forms
//! and Hilbert series of quotient rings.

mod buchberger;
mod division;
mod hilbert;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use buchberger::{
    buchberger, buchberger_with_stats, reduce_basis, s_poly, BuchbergerOptions, BuchbergerStats,
    Budget, GroebnerBasis, PairStrategy,
};
pub use division::multi_divide;
pub use hilbert::{hilbert_numerator, hilbert_series_quotient, HilbertData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrobnerError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("budget exceeded after {pairs} pairs (pair lcm degree {degree}, {basis_len} basis elements); partial basis discarded")]
    Budget {
        pairs: usize,
        degree: u32,
        basis_len: usize,
    },
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("no generators to infer the ring from")]
    NoRing,
}

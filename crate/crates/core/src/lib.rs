//! Exact-arithmetic Schubert calculus on the symmetric group.
//!
//! The crate implements divided difference and skew divided difference
//! operators, Schubert / skew Schubert / key polynomials, the nilCoxeter
//! Schubert expression, the bracket algebra, three independent routes to
//! the Schubert structure constants, and an exhaustive verification
//! harness over small symmetric groups.

pub mod app;
pub mod bracket;
pub mod divdiff;
pub mod error;
pub mod key;
pub mod nilcox;
pub mod perm;
pub mod poly;
pub mod schubert;
pub mod schur;
pub mod skew;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use perm::Permutation;
pub use poly::Polynomial;

//! Exact linear algebra over the rationals and prime fields.
//!
//! Every operation is exact. Rational elimination is fraction-free (Bareiss) and
//! prime-field elimination is plain Gauss-Jordan; both choose the first nonzero
//! entry in column order as pivot, so echelon bases are reproducible.

mod elim;
pub mod field;
pub mod matrix;
pub mod vector;

pub use field::{is_prime, Field, Scalar};
pub use matrix::{Matrix, Rref};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}

//! Braided doubles over finite group algebras.
//!
//! The crate builds quasi-Yetter-Drinfeld structures over `kG`, the braided and
//! quasibraided factorials attached to them, the minimal quotients of free braided
//! doubles and their normal forms, Nichols-Woronowicz algebras, and rational
//! Cherednik algebras with their restricted versions, all at a finite degree
//! truncation and with exact arithmetic.

pub mod catalog;
pub mod cherednik;
pub mod double;
pub mod generic;
pub mod gmodule;
pub mod group;
pub mod nichols;
pub mod ops;
pub mod poly;
pub mod quotient;
pub mod qyd;
pub mod suite;
pub mod tensor;

pub use exact_linalg::{Field, Matrix, Rref, Scalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidedError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("truncation exceeded: {0}")]
    Truncation(String),
    #[error("specialisations disagree: {0}")]
    Unstable(String),
    #[error(transparent)]
    Linalg(#[from] exact_linalg::LinalgError),
}

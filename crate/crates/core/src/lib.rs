//! Exact analysis of submonoids of ℕ^d: conic hulls, face lattices, atoms,
//! factorizations and factorization-theoretic classification.

pub mod classify;
pub mod cone;
pub mod error;
pub mod exactarith;
pub mod factorization;
pub mod grid;
pub mod monoid;

pub use error::{Error, Result};

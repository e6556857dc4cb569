//! Submonoids of ℕ^d: representations, membership, atoms and divisors.

pub mod ops;
pub mod spec;
pub mod window;

pub use ops::{atoms, atoms_with_table, divisors, generated_atoms, rank, AtomReport, Rank};
pub use spec::{
    band, leamer, slope_sequence, BuiltIn, ConeWindowMonoid, GeneratedMonoid, LeamerMonoid, MonoidSpec,
    NumericalMonoid, PointData, Region,
};
pub use window::{BoxTable, Window};

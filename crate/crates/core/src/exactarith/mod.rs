//! Exact arithmetic over ℚ and ℚ(√n).

pub mod feasibility;
pub mod linalg;
pub mod quad;
pub mod rational;

pub use feasibility::{feasible, in_conic_hull, Constraint, OrderedField};
pub use linalg::{affine_rank, rank, rank_of, solve_common_hyperplane, QMatrix, QVector};
pub use quad::{parse_quad, quad_compare, QuadScalar};
pub use rational::{format_rational, parse_rational, Rational};

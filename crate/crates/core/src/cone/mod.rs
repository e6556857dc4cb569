//! Exact polyhedral cones: hulls, facets, face lattices, triangulations and
//! realizability.

pub mod lattice;
pub mod polyhedral;
pub mod quadratic;
pub mod realize;
pub mod triangulation;

pub use lattice::{face_lattice, Face, FaceLattice};
pub use polyhedral::{cone_from_generators, is_pointed, is_positive, Positivity, RationalCone};
pub use quadratic::{check_realizable, is_rational_ray, QuadCone, Ray};
pub use realize::{interior_simplex, realize, realize_finitary, verify_interior_simplex, InteriorSimplex};
pub use triangulation::{triangulate, verify_triangulation, SimplicialCone, Triangulation};

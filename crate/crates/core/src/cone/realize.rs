//! Monoids realizing a cone, and rational simplicial cones around interior
//! rays.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::polyhedral::RationalCone;
use crate::error::{Error, Result};
use crate::exactarith::linalg::{QMatrix, QVector};
use crate::exactarith::rational::Rational;
use crate::grid::box_points;

/// Nonzero lattice points of `c` inside the box `[0, bounds]`. Fails if some
/// extreme ray has no lattice point in the box, since then the points could
/// not generate `c`.
pub fn realize(c: &RationalCone, bounds: &[i64]) -> Result<Vec<Vec<i64>>> {
    check_window(c, bounds)?;
    Ok(box_points(bounds)
        .into_iter()
        .filter(|p| p.iter().any(|&x| x != 0) && c.contains(&QVector::from_ints(p)))
        .collect())
}

fn check_window(c: &RationalCone, bounds: &[i64]) -> Result<()> {
    if bounds.len() != c.ambient() {
        return Err(Error::Invalid("window dimension differs from cone".into()));
    }
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    for r in c.extreme_rays() {
        let fits = r.to_i64().is_some_and(|v| v.iter().zip(bounds).all(|(&x, &b)| (0..=b).contains(&x)));
        if !fits {
            return Err(Error::WindowTooSmall(format!("extreme ray {r:?} has no lattice point in the window")));
        }
    }
    Ok(())
}

/// `M′ = {0} ∪ (v₀ + M)` with `M = c ∩ ℕ^d`, on a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitaryRealization {
    pub v0: Vec<i64>,
    pub points: Vec<Vec<i64>>,
}

/// Finitary mode of [`realize`]. `v₀` is the graded-lex least lattice point
/// of the window in the relative interior of `c`.
pub fn realize_finitary(c: &RationalCone, bounds: &[i64]) -> Result<FinitaryRealization> {
    check_window(c, bounds)?;
    let members: Vec<Vec<i64>> =
        crate::grid::graded_points(bounds, None).into_iter().filter(|p| c.contains(&QVector::from_ints(p))).collect();
    let v0 = members
        .iter()
        .find(|p| p.iter().any(|&x| x != 0) && c.contains_relative_interior(&QVector::from_ints(p)))
        .cloned()
        .ok_or_else(|| Error::WindowTooSmall("no interior lattice point in the window".into()))?;
    let points = members.iter().map(|m| crate::grid::add(m, &v0)).filter(|p| crate::grid::leq(p, bounds)).collect();
    Ok(FinitaryRealization { v0, points })
}

/// A full-dimensional rational simplicial cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InteriorSimplex {
    /// Primitive integer rays.
    pub rays: Vec<QVector>,
    /// Scale used in the construction.
    #[serde(serialize_with = "crate::exactarith::rational::serialize_bigint")]
    pub n: BigInt,
    /// The apex `q` before scaling rays to integers.
    pub q: QVector,
}

/// Simplicial cone `C_x = cone(q + e_i/N)` with `x` in its interior and
/// `C_x ∖ {0}` inside the interior of `c`.
pub fn interior_simplex(c: &RationalCone, x: &QVector) -> Result<InteriorSimplex> {
    let d = c.ambient();
    if !c.is_full_dimensional() || !c.is_pointed() {
        return Err(Error::Invalid("cone must be full-dimensional and pointed".into()));
    }
    if !c.extreme_rays().iter().all(QVector::is_nonnegative) {
        return Err(Error::Invalid("cone must be positive".into()));
    }
    if !c.contains_relative_interior(x) {
        return Err(Error::NotInterior);
    }
    if d == 1 {
        return Ok(InteriorSimplex { rays: c.extreme_rays().to_vec(), n: BigInt::one(), q: x.clone() });
    }

    // N with 4 N² ⟨x,n⟩² > 9 ‖n‖² for every facet normal n
    let mut n = BigInt::one();
    for f in c.facets() {
        let s = x.dot(f);
        let lhs = &s * &s * Rational::from_integer(BigInt::from(4));
        let rhs = f.norm2() * Rational::from_integer(BigInt::from(9));
        while Rational::from_integer(&n * &n) * &lhs <= rhs {
            n *= 2;
        }
    }
    loop {
        let nq = Rational::from_integer(n.clone());
        let dq = Rational::from_integer(BigInt::from(d as i64));
        let min_x = x.coords().iter().min().cloned().unwrap_or_else(Rational::zero);
        let mut delta = Rational::one() / (Rational::from_integer(BigInt::from(2)) * &dq * &nq);
        let half_min = min_x / Rational::from_integer(BigInt::from(2));
        if half_min < delta {
            delta = half_min;
        }
        let q = QVector::new(x.coords().iter().map(|xi| xi - &delta).collect());
        let rays: Vec<QVector> =
            (0..d).map(|i| q.add(&QVector::unit(d, i).scale(&(Rational::one() / &nq))).primitive()).collect();
        let s = InteriorSimplex { rays, n: n.clone(), q };
        if verify_interior_simplex(c, x, &s) {
            return Ok(s);
        }
        n *= 2;
    }
}

/// Exact postconditions: rays independent, every ray strictly inside `c`,
/// and `x` a strictly positive combination of the rays.
pub fn verify_interior_simplex(c: &RationalCone, x: &QVector, s: &InteriorSimplex) -> bool {
    let d = c.ambient();
    if s.rays.len() != d {
        return false;
    }
    if d == 1 {
        return s.rays.iter().all(|r| c.contains(r)) && c.contains_relative_interior(x);
    }
    if !s.rays.iter().all(|r| c.contains_relative_interior(r)) {
        return false;
    }
    let m = QMatrix::from_rows(s.rays.clone()).transpose();
    if m.rank() != d {
        return false;
    }
    match m.solve(x) {
        Some(lambda) => lambda.coords().iter().all(Signed::is_positive),
        None => false,
    }
}

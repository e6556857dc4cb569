//! Rational polyhedral cones in V- and H-representation.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactarith::linalg::{rank_of, QMatrix, QVector};
use crate::exactarith::rational::primitive_integer;

/// A cone `{x : ⟨x,e⟩ = 0 for all equations, ⟨x,u⟩ ≥ 0 for all facets}`.
///
/// Rays and facet normals are primitive integer vectors, sorted. Facet
/// normals are taken inside the linear span of the cone, which makes them
/// unique even when the cone is not full-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalCone {
    ambient: usize,
    dim: usize,
    pointed: bool,
    rays: Vec<QVector>,
    facets: Vec<QVector>,
    equations: Vec<QVector>,
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_q(v: &[BigInt]) -> QVector {
    QVector::from_bigints(v)
}

/// Primitive integer basis of `{u : ⟨r,u⟩ = 0 for every row r}`.
fn integer_nullspace(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let m = QMatrix::new(rows.iter().map(|r| to_q(r)).collect(), cols);
    m.nullspace().into_iter().map(|v| primitive_integer(v.coords())).collect()
}

impl RationalCone {
    /// Conic hull of `gens` in `ℚ^ambient`. Never fails; the result may be
    /// non-pointed, in which case no extreme rays are recorded.
    pub fn hull(ambient: usize, gens: &[QVector]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.dim() != ambient) {
            return Err(Error::Invalid(format!("generator {g:?} does not live in dimension {ambient}")));
        }
        let dirs: Vec<Vec<BigInt>> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| primitive_integer(g.coords()))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let qdirs: Vec<QVector> = dirs.iter().map(|d| to_q(d)).collect();
        let dim = rank_of(&qdirs);
        let equations = integer_nullspace(&dirs, ambient);
        if dim == 0 {
            return Ok(Self {
                ambient,
                dim,
                pointed: true,
                rays: Vec::new(),
                facets: Vec::new(),
                equations: equations.iter().map(|e| to_q(e)).collect(),
            });
        }

        let mut facets: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for subset in dirs.iter().combinations(dim - 1) {
            let mut rows = equations.clone();
            rows.extend(subset.into_iter().cloned());
            let null = integer_nullspace(&rows, ambient);
            if null.len() != 1 {
                continue;
            }
            let u = &null[0];
            let (mut pos, mut neg) = (false, false);
            for d in &dirs {
                let s = int_dot(d, u);
                pos |= s.is_positive();
                neg |= s.is_negative();
                if pos && neg {
                    break;
                }
            }
            match (pos, neg) {
                (true, false) => {
                    facets.insert(u.clone());
                }
                (false, true) => {
                    facets.insert(u.iter().map(|x| -x).collect());
                }
                _ => {}
            }
        }

        let mut system: Vec<QVector> = equations.iter().map(|e| to_q(e)).collect();
        system.extend(facets.iter().map(|f| to_q(f)));
        let pointed = rank_of(&system) == ambient;

        let rays: Vec<QVector> = if pointed {
            dirs.iter()
                .filter(|d| {
                    let mut tight: Vec<QVector> = equations.iter().map(|e| to_q(e)).collect();
                    tight.extend(facets.iter().filter(|f| int_dot(d, f).is_zero()).map(|f| to_q(f)));
                    rank_of(&tight) + 1 == ambient
                })
                .map(|d| to_q(d))
                .collect()
        } else {
            Vec::new()
        };

        let cone = Self {
            ambient,
            dim,
            pointed,
            rays,
            facets: facets.iter().map(|f| to_q(f)).collect(),
            equations: equations.iter().map(|e| to_q(e)).collect(),
        };
        debug_assert!(gens.iter().all(|g| cone.contains(g)));
        Ok(cone)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// Extreme rays as primitive integer vectors (empty unless pointed).
    pub fn extreme_rays(&self) -> &[QVector] {
        &self.rays
    }

    /// Facet normals `u`, meaning `⟨x,u⟩ ≥ 0`.
    pub fn facets(&self) -> &[QVector] {
        &self.facets
    }

    /// Basis of the orthogonal complement of the linear span.
    pub fn equations(&self) -> &[QVector] {
        &self.equations
    }

    pub fn contains(&self, x: &QVector) -> bool {
        self.equations.iter().all(|e| x.dot(e).is_zero()) && self.facets.iter().all(|f| !x.dot(f).is_negative())
    }

    /// Membership in the relative interior.
    pub fn contains_relative_interior(&self, x: &QVector) -> bool {
        self.equations.iter().all(|e| x.dot(e).is_zero()) && self.facets.iter().all(|f| x.dot(f).is_positive())
    }

    /// Indices of facets on which `x` vanishes.
    pub fn tight_facets(&self, x: &QVector) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| x.dot(&self.facets[i]).is_zero()).collect()
    }

    /// Is the cone simplicial (extreme rays linearly independent)?
    pub fn is_simplicial(&self) -> bool {
        self.pointed && self.rays.len() == self.dim
    }
}

/// Conic hull of a nonempty generator list; fails on cones containing a line.
pub fn cone_from_generators(gens: &[QVector]) -> Result<RationalCone> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("empty generator list".into()));
    };
    if gens.iter().any(QVector::is_zero) {
        return Err(Error::Invalid("zero generator".into()));
    }
    let c = RationalCone::hull(first.dim(), gens)?;
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    Ok(c)
}

pub fn is_pointed(c: &RationalCone) -> bool {
    c.is_pointed()
}

/// Outcome of a positivity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Positivity {
    pub positive: bool,
    /// Unimodular matrix `U` with `U·r ≥ 0` for every extreme ray, when the
    /// standard basis fails but another basis was found.
    pub basis: Option<Vec<Vec<i64>>>,
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_i64(&minor)
            })
            .sum(),
    }
}

/// Positivity in the standard basis; for pointed cones in dimension at most
/// three, also searches unimodular bases with entries in {−1,0,1}.
pub fn is_positive(c: &RationalCone) -> Positivity {
    if c.extreme_rays().iter().all(QVector::is_nonnegative) && c.is_pointed() {
        return Positivity { positive: true, basis: None };
    }
    let d = c.ambient();
    if !c.is_pointed() || d > 3 {
        return Positivity { positive: false, basis: None };
    }
    let entries = [-1i64, 0, 1];
    let cells = d * d;
    for code in 0..3usize.pow(cells as u32) {
        let mut k = code;
        let mut m = vec![vec![0i64; d]; d];
        for cell in 0..cells {
            m[cell / d][cell % d] = entries[k % 3];
            k /= 3;
        }
        if det_i64(&m).abs() != 1 {
            continue;
        }
        let ok = c.extreme_rays().iter().all(|r| m.iter().all(|row| !QVector::from_ints(row).dot(r).is_negative()));
        if ok {
            return Positivity { positive: false, basis: Some(m) };
        }
    }
    Positivity { positive: false, basis: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(rows: &[&[i64]]) -> Vec<QVector> {
        rows.iter().map(|r| QVector::from_ints(r)).collect()
    }

    #[test]
    fn redundant_generator_dropped() {
        let c = cone_from_generators(&qv(&[&[2, 1], &[1, 2], &[1, 1]])).unwrap();
        assert_eq!(c.extreme_rays(), qv(&[&[1, 2], &[2, 1]]).as_slice());
        assert_eq!(c.dim(), 2);
        assert_eq!(c.facets().len(), 2);
        assert!(c.contains(&QVector::from_ints(&[1, 1])));
        assert!(!c.contains(&QVector::from_ints(&[1, 0])));
    }

    #[test]
    fn orthant_facets() {
        for d in 1..=4 {
            let gens: Vec<QVector> = (0..d).map(|i| QVector::unit(d, i)).collect();
            let c = cone_from_generators(&gens).unwrap();
            let mut sorted = gens.clone();
            sorted.sort();
            assert_eq!(c.facets(), sorted.as_slice());
            assert!(c.is_simplicial());
        }
    }

    #[test]
    fn single_ray() {
        let c = cone_from_generators(&qv(&[&[1, 1]])).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.extreme_rays(), qv(&[&[1, 1]]).as_slice());
        assert_eq!(c.facets(), qv(&[&[1, 1]]).as_slice());
        assert_eq!(c.equations().len(), 1);
    }

    #[test]
    fn lines_are_rejected() {
        let g = qv(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(cone_from_generators(&g), Err(Error::NotPointed));
        let c = RationalCone::hull(2, &g).unwrap();
        assert!(!is_pointed(&c));
        assert!(is_pointed(&cone_from_generators(&qv(&[&[2, 1], &[1, 2]])).unwrap()));
        let line = RationalCone::hull(2, &qv(&[&[1, 0], &[-1, 0]])).unwrap();
        assert!(!line.is_pointed());
    }

    #[test]
    fn lower_dimensional_cone_in_space() {
        let c = cone_from_generators(&qv(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.extreme_rays().len(), 2);
        assert_eq!(c.facets().len(), 2);
        for f in c.facets() {
            assert!(c.equations().iter().all(|e| e.dot(f).is_zero()));
        }
    }

    #[test]
    fn positivity() {
        let c = cone_from_generators(&qv(&[&[2, 1], &[1, 2]])).unwrap();
        assert!(is_positive(&c).positive);
        let c = cone_from_generators(&qv(&[&[1, -1], &[1, 1]])).unwrap();
        let p = is_positive(&c);
        assert!(!p.positive);
        let u = p.basis.expect("a basis exists");
        for r in c.extreme_rays() {
            for row in &u {
                assert!(!QVector::from_ints(row).dot(r).is_negative());
            }
        }
    }
}

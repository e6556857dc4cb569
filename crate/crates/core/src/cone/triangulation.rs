//! Placing triangulations of cones on prescribed generators.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::polyhedral::RationalCone;
use crate::error::{Error, Result};
use crate::exactarith::feasibility::{feasible, Constraint};
use crate::exactarith::linalg::{rank_of, QVector};
use crate::exactarith::rational::Rational;

/// Conic hull of linearly independent generators, by index into a shared
/// generator list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SimplicialCone {
    pub ray_indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    pub generators: Vec<QVector>,
    pub cells: Vec<SimplicialCone>,
}

impl Triangulation {
    pub fn cell_rays(&self, cell: &SimplicialCone) -> Vec<QVector> {
        cell.ray_indices.iter().map(|&i| self.generators[i].clone()).collect()
    }
}

fn hull_of(ambient: usize, gens: &[QVector], idx: &[usize]) -> RationalCone {
    let vs: Vec<QVector> = idx.iter().map(|&i| gens[i].clone()).collect();
    RationalCone::hull(ambient, &vs).expect("dimensions agree")
}

/// Placing triangulation of `c` using `prescribed` in input order.
///
/// Every extreme ray of `c` must carry a prescribed vector; vectors that
/// fall inside the cone built so far are not used.
pub fn triangulate(c: &RationalCone, prescribed: &[QVector]) -> Result<Triangulation> {
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    for v in prescribed {
        if v.is_zero() || !c.contains(v) {
            return Err(Error::GeneratorsInsufficient(format!("{v:?} is not a nonzero vector of the cone")));
        }
    }
    for r in c.extreme_rays() {
        if !prescribed.iter().any(|v| v.primitive() == *r) {
            return Err(Error::GeneratorsInsufficient(format!("no prescribed vector on extreme ray {r:?}")));
        }
    }

    let ambient = c.ambient();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut used: Vec<usize> = Vec::new();
    for (k, v) in prescribed.iter().enumerate() {
        let current = hull_of(ambient, prescribed, &used);
        let in_span = current.equations().iter().all(|e| v.dot(e).is_zero());
        if used.is_empty() || !in_span {
            if cells.is_empty() {
                cells.push(vec![k]);
            } else {
                for cell in cells.iter_mut() {
                    cell.push(k);
                }
            }
            used.push(k);
            continue;
        }
        if current.contains(v) {
            continue;
        }
        let visible: Vec<&QVector> = current.facets().iter().filter(|f| v.dot(f).is_negative()).collect();
        let mut added = Vec::new();
        for cell in &cells {
            for skip in 0..cell.len() {
                let wall: Vec<usize> = cell.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g).collect();
                let on_visible = visible.iter().any(|f| wall.iter().all(|&g| prescribed[g].dot(f).is_zero()));
                if on_visible {
                    let mut nc = wall;
                    nc.push(k);
                    added.push(nc);
                }
            }
        }
        cells.extend(added);
        used.push(k);
    }

    let mut cells: Vec<SimplicialCone> = cells
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            SimplicialCone { ray_indices: c }
        })
        .collect();
    cells.sort();
    let t = Triangulation { generators: prescribed.to_vec(), cells };
    verify_triangulation(c, &t)?;
    Ok(t)
}

/// Exact checks: cells are simplicial of full dimension, walls satisfy the
/// pseudo-manifold condition relative to the boundary of `c`, and any two
/// cells meet in their common face.
pub fn verify_triangulation(c: &RationalCone, t: &Triangulation) -> Result<()> {
    let fail = |m: String| Err(Error::CertificateInvalid(m));
    let d = c.dim();
    for cell in &t.cells {
        let rays = t.cell_rays(cell);
        if rays.len() != d || rank_of(&rays) != d {
            return fail(format!("cell {:?} is not a full simplicial cone", cell.ray_indices));
        }
        if !rays.iter().all(|r| c.contains(r)) {
            return fail(format!("cell {:?} leaves the cone", cell.ray_indices));
        }
    }
    if d == 0 {
        return Ok(());
    }

    // wall -> (cell index, side of the opposite ray)
    let mut walls: BTreeMap<Vec<usize>, Vec<(usize, QVector)>> = BTreeMap::new();
    for (ci, cell) in t.cells.iter().enumerate() {
        for skip in 0..cell.ray_indices.len() {
            let wall: Vec<usize> =
                cell.ray_indices.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g).collect();
            walls.entry(wall).or_default().push((ci, t.generators[cell.ray_indices[skip]].clone()));
        }
    }
    for (wall, owners) in &walls {
        let wrays: Vec<QVector> = wall.iter().map(|&g| t.generators[g].clone()).collect();
        let on_boundary = c.facets().iter().any(|f| wrays.iter().all(|r| r.dot(f).is_zero()));
        if on_boundary {
            if owners.len() != 1 {
                return fail(format!("boundary wall {wall:?} lies in {} cells", owners.len()));
            }
            continue;
        }
        if owners.len() != 2 {
            return fail(format!("interior wall {wall:?} lies in {} cells", owners.len()));
        }
        // a normal of the wall inside the span of the cone
        let mut rows: Vec<QVector> = c.equations().to_vec();
        rows.extend(wrays.iter().cloned());
        let null = crate::exactarith::linalg::QMatrix::new(rows, c.ambient()).nullspace();
        let n = &null[0];
        let s0 = owners[0].1.dot(n);
        let s1 = owners[1].1.dot(n);
        if (s0.is_positive() && s1.is_positive()) || (s0.is_negative() && s1.is_negative()) {
            return fail(format!("cells on wall {wall:?} overlap"));
        }
    }

    for (a, b) in (0..t.cells.len()).tuple_combinations() {
        if cells_overlap(c.ambient(), t, a, b) {
            return fail(format!(
                "cells {:?} and {:?} meet outside their common face",
                t.cells[a].ray_indices, t.cells[b].ray_indices
            ));
        }
    }
    Ok(())
}

/// Is there a point of both cells whose representation uses a ray outside
/// the common face?
fn cells_overlap(ambient: usize, t: &Triangulation, a: usize, b: usize) -> bool {
    let ra = &t.cells[a].ray_indices;
    let rb = &t.cells[b].ray_indices;
    let n = ra.len() + rb.len();
    let zero = Rational::zero();
    let one = Rational::one();
    let mut eqs = Vec::new();
    for i in 0..ambient {
        let mut coeffs: Vec<Rational> = ra.iter().map(|&g| t.generators[g][i].clone()).collect();
        coeffs.extend(rb.iter().map(|&g| -t.generators[g][i].clone()));
        eqs.push(Constraint::new(coeffs, zero.clone()));
    }
    let mut ineqs: Vec<Constraint<Rational>> = (0..n)
        .map(|j| {
            let mut c = vec![zero.clone(); n];
            c[j] = one.clone();
            Constraint::new(c, zero.clone())
        })
        .collect();
    let mut outside = vec![zero.clone(); n];
    for (j, g) in ra.iter().enumerate() {
        if !rb.contains(g) {
            outside[j] = one.clone();
        }
    }
    for (j, g) in rb.iter().enumerate() {
        if !ra.contains(g) {
            outside[ra.len() + j] = one.clone();
        }
    }
    ineqs.push(Constraint::new(outside, one.clone()));
    feasible(n, &eqs, &ineqs, &one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::polyhedral::cone_from_generators;

    fn qv(rows: &[&[i64]]) -> Vec<QVector> {
        rows.iter().map(|r| QVector::from_ints(r)).collect()
    }

    fn cells(t: &Triangulation) -> Vec<Vec<Vec<i64>>> {
        t.cells.iter().map(|c| t.cell_rays(c).iter().map(|r| r.to_i64().unwrap()).collect()).collect()
    }

    #[test]
    fn orthants_are_single_cells() {
        for d in [2, 3] {
            let g: Vec<QVector> = (0..d).map(|i| QVector::unit(d, i)).collect();
            let c = cone_from_generators(&g).unwrap();
            assert_eq!(triangulate(&c, &g).unwrap().cells.len(), 1);
        }
    }

    #[test]
    fn placing_order_splits_at_middle_ray() {
        let g = qv(&[&[1, 0], &[1, 1], &[0, 1]]);
        let c = cone_from_generators(&g).unwrap();
        let t = triangulate(&c, &g).unwrap();
        assert_eq!(cells(&t), vec![vec![vec![1, 0], vec![1, 1]], vec![vec![1, 1], vec![0, 1]]]);
    }

    #[test]
    fn interior_vectors_skipped() {
        let g = qv(&[&[1, 0], &[0, 1], &[1, 1]]);
        let c = cone_from_generators(&g).unwrap();
        assert_eq!(triangulate(&c, &g).unwrap().cells.len(), 1);
    }

    #[test]
    fn square_cone_gets_two_cells() {
        let g = qv(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let c = cone_from_generators(&g).unwrap();
        let t = triangulate(&c, &g).unwrap();
        assert_eq!(t.cells.len(), 2);
    }

    #[test]
    fn missing_ray_rejected() {
        let c = cone_from_generators(&qv(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(matches!(triangulate(&c, &qv(&[&[1, 0], &[1, 1]])), Err(Error::GeneratorsInsufficient(_))));
    }

    #[test]
    fn overlapping_cells_detected() {
        let g = qv(&[&[1, 0], &[1, 1], &[0, 1]]);
        let c = cone_from_generators(&g).unwrap();
        let bad = Triangulation {
            generators: g,
            cells: vec![SimplicialCone { ray_indices: vec![0, 1] }, SimplicialCone { ray_indices: vec![0, 2] }],
        };
        assert!(verify_triangulation(&c, &bad).is_err());
    }
}

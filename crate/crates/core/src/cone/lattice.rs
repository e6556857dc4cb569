//! Face lattices of pointed rational cones.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::polyhedral::RationalCone;
use crate::error::{Error, Result};
use crate::exactarith::linalg::{rank_of, QVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Sorted indices into the cone's extreme rays.
    pub ray_indices: Vec<usize>,
    pub dim: usize,
    /// Zero on the face's rays, positive on every other ray.
    pub supporting_normal: QVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceLattice {
    /// Sorted by dimension, then by ray indices. Index 0 is the zero face,
    /// the last index is the whole cone.
    pub faces: Vec<Face>,
    /// Cover relations `(lower, upper)` of the Hasse diagram.
    pub covers: Vec<(usize, usize)>,
    #[serde(skip)]
    index: BTreeMap<Vec<usize>, usize>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn find(&self, ray_indices: &[usize]) -> Option<usize> {
        self.index.get(ray_indices).copied()
    }

    /// Face whose ray set is the intersection of the two ray sets.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let sb: BTreeSet<usize> = self.faces[b].ray_indices.iter().copied().collect();
        let common: Vec<usize> = self.faces[a].ray_indices.iter().copied().filter(|i| sb.contains(i)).collect();
        self.find(&common).expect("face lattice is meet-closed")
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        let sb: BTreeSet<usize> = self.faces[b].ray_indices.iter().copied().collect();
        self.faces[a].ray_indices.iter().all(|i| sb.contains(i))
    }

    /// Faces of a given dimension.
    pub fn of_dim(&self, dim: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&i| self.faces[i].dim == dim)
    }
}

/// Enumerates every face as an intersection of facets.
pub fn face_lattice(c: &RationalCone) -> Result<FaceLattice> {
    if !c.is_pointed() {
        return Err(Error::NotPointed);
    }
    let rays = c.extreme_rays();
    let facet_rays: Vec<BTreeSet<usize>> =
        c.facets().iter().map(|f| (0..rays.len()).filter(|&i| rays[i].dot(f).is_zero()).collect()).collect();

    let top: BTreeSet<usize> = (0..rays.len()).collect();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([top.clone()]);
    seen.insert(top);
    while let Some(face) = queue.pop_front() {
        for fr in &facet_rays {
            let next: BTreeSet<usize> = face.intersection(fr).copied().collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }

    let mut faces: Vec<Face> = seen
        .into_iter()
        .map(|set| {
            let ray_indices: Vec<usize> = set.iter().copied().collect();
            let vecs: Vec<QVector> = ray_indices.iter().map(|&i| rays[i].clone()).collect();
            let normal = facet_rays
                .iter()
                .zip(c.facets())
                .filter(|(fr, _)| set.is_subset(fr))
                .fold(QVector::zeros(c.ambient()), |acc, (_, f)| acc.add(f));
            Face { dim: rank_of(&vecs), ray_indices, supporting_normal: normal }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.ray_indices).cmp(&(b.dim, &b.ray_indices)));

    for f in &faces {
        for (i, r) in rays.iter().enumerate() {
            let s = r.dot(&f.supporting_normal);
            let on = f.ray_indices.binary_search(&i).is_ok();
            assert!(if on { s.is_zero() } else { s.is_positive() }, "bad face witness");
        }
    }

    let index: BTreeMap<Vec<usize>, usize> =
        faces.iter().enumerate().map(|(i, f)| (f.ray_indices.clone(), i)).collect();
    let mut covers = Vec::new();
    for (i, lo) in faces.iter().enumerate() {
        for (j, hi) in faces.iter().enumerate() {
            if hi.dim == lo.dim + 1 && lo.ray_indices.iter().all(|r| hi.ray_indices.contains(r)) {
                covers.push((i, j));
            }
        }
    }
    Ok(FaceLattice { faces, covers, index })
}

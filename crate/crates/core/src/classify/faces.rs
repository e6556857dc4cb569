//! Face submonoids and divisor-closed submonoids.

use serde::Serialize;

use super::factorial::classify_ufm;
use crate::cone::{cone_from_generators, face_lattice, FaceLattice, RationalCone};
use crate::error::{Error, Result};
use crate::exactarith::linalg::QVector;
use crate::grid;
use crate::monoid::{generated_atoms, MonoidSpec, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSubmonoid {
    /// Index into the face lattice of `cone(M)`.
    pub face: usize,
    pub dim: usize,
    /// Extreme rays of the face, primitive.
    pub rays: Vec<QVector>,
    /// Generators of `M` lying on the face.
    pub generators: Vec<Vec<i64>>,
    /// Atoms of the submonoid; equal to the atoms of `M` on the face.
    pub atoms: Vec<Vec<i64>>,
}

impl FaceSubmonoid {
    pub fn monoid(&self, dim: usize) -> MonoidSpec {
        MonoidSpec::generated(dim, self.generators.clone()).expect("generators come from a valid monoid")
    }
}

/// The cone of a generated monoid together with its face lattice.
pub struct FaceData {
    pub cone: RationalCone,
    pub lattice: FaceLattice,
    pub submonoids: Vec<FaceSubmonoid>,
}

fn generated(m: &MonoidSpec) -> Result<&crate::monoid::GeneratedMonoid> {
    m.as_generated().ok_or_else(|| Error::Invalid("face submonoids need a finitely generated monoid".into()))
}

/// One submonoid per face of `cone(M)`, generated by the generators on the
/// face. Asserts `𝒜(N) = 𝒜(M) ∩ F` and `cone(N) = F`.
pub fn face_submonoids(m: &MonoidSpec) -> Result<FaceData> {
    let g = generated(m)?;
    let dim = g.dim();
    let atoms = generated_atoms(m).expect("generated monoid");
    if atoms.is_empty() {
        return Err(Error::Invalid("the trivial monoid has no cone to analyse".into()));
    }
    let cone = cone_from_generators(&atoms.iter().map(|a| QVector::from_ints(a)).collect::<Vec<_>>())?;
    let lattice = face_lattice(&cone)?;
    let mut submonoids = Vec::with_capacity(lattice.len());
    for (i, face) in lattice.faces.iter().enumerate() {
        let on_face = |x: &Vec<i64>| {
            let q = QVector::from_ints(x);
            num_traits::Zero::is_zero(&q.dot(&face.supporting_normal))
        };
        let generators: Vec<Vec<i64>> = g.generators().iter().filter(|x| on_face(x)).cloned().collect();
        let rays: Vec<QVector> = face.ray_indices.iter().map(|&r| cone.extreme_rays()[r].clone()).collect();
        let n = MonoidSpec::generated(dim, generators.clone())?;
        let n_atoms = generated_atoms(&n).expect("generated monoid");
        let expected: Vec<Vec<i64>> = atoms.iter().filter(|a| on_face(a)).cloned().collect();
        assert_eq!(n_atoms, expected, "atoms of the face submonoid differ from the atoms on the face");
        let n_cone = RationalCone::hull(dim, &generators.iter().map(|x| QVector::from_ints(x)).collect::<Vec<_>>())?;
        let f_cone = RationalCone::hull(dim, &rays)?;
        assert_eq!(n_cone, f_cone, "face submonoid does not generate its face");
        submonoids.push(FaceSubmonoid { face: i, dim: face.dim, rays, generators, atoms: n_atoms });
    }
    Ok(FaceData { cone, lattice, submonoids })
}

/// `x ∈ M` dividing `y ∈ N` with `x ∉ N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorWitness {
    pub element: Vec<i64>,
    pub divisor: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClosedVerdict {
    pub holds: bool,
    pub window: Window,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DivisorWitness>,
}

/// Sweeps `y ∈ ⟨N⟩ ∩ w` and checks that every divisor of `y` in `M` lies in
/// `⟨N⟩`.
pub fn is_divisor_closed(m: &MonoidSpec, n_generators: &[Vec<i64>], w: &Window) -> Result<DivisorClosedVerdict> {
    let n = MonoidSpec::generated(m.dim(), n_generators.to_vec())?;
    if let Some(g) = n_generators.iter().find(|g| !m.contains(g)) {
        return Err(Error::Invalid(format!("{g:?} is not in M")));
    }
    let mt = m.member_table(&w.bounds);
    let nt = n.member_table(&w.bounds);
    for y in w.points() {
        if !*nt.get(&y).unwrap() {
            continue;
        }
        for x in grid::box_points(&y) {
            if *mt.get(&x).unwrap() && *mt.get(&grid::sub(&y, &x)).unwrap() && !*nt.get(&x).unwrap() {
                return Ok(DivisorClosedVerdict {
                    holds: false,
                    window: w.clone(),
                    witness: Some(DivisorWitness { element: y, divisor: x }),
                });
            }
        }
    }
    Ok(DivisorClosedVerdict { holds: true, window: w.clone(), witness: None })
}

/// Re-checks a divisor witness by direct membership tests.
pub fn verify_divisor_witness(m: &MonoidSpec, n_generators: &[Vec<i64>], wit: &DivisorWitness) -> bool {
    let Ok(n) = MonoidSpec::generated(m.dim(), n_generators.to_vec()) else {
        return false;
    };
    n.contains(&wit.element)
        && grid::leq(&wit.divisor, &wit.element)
        && m.contains(&wit.divisor)
        && m.contains(&grid::sub(&wit.element, &wit.divisor))
        && !n.contains(&wit.divisor)
}

/// UFM status of every face submonoid, with the set of non-UFM faces and,
/// when that set is an upper interval `[F, top]`, its least face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceUfmMap {
    pub ufm: Vec<bool>,
    pub non_ufm: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<(usize, usize)>,
    pub is_interval: bool,
}

pub fn face_ufm_map(m: &MonoidSpec) -> Result<FaceUfmMap> {
    let data = face_submonoids(m)?;
    let lat = &data.lattice;
    let w = Window::cube(m.dim(), 1).expect("positive bounds");
    let ufm: Vec<bool> = data.submonoids.iter().map(|s| classify_ufm(&s.monoid(m.dim()), &w).holds).collect();
    let non_ufm: Vec<usize> = (0..ufm.len()).filter(|&i| !ufm[i]).collect();
    if non_ufm.is_empty() {
        return Ok(FaceUfmMap { ufm, non_ufm, interval: None, is_interval: true });
    }
    let minimal: Vec<usize> =
        non_ufm.iter().copied().filter(|&f| !non_ufm.iter().any(|&g| g != f && lat.leq(g, f))).collect();
    let upward_closed = non_ufm.iter().all(|&f| (0..lat.len()).filter(|&g| lat.leq(f, g)).all(|g| !ufm[g]));
    let is_interval = upward_closed && minimal.len() == 1;
    let interval = is_interval.then(|| (minimal[0], lat.top()));
    Ok(FaceUfmMap { ufm, non_ufm, interval, is_interval })
}

/// The non-UFM face submonoids of an OHFM form an interval `[F, top]` of the
/// face lattice, or no face at all.
pub fn non_ufm_face_interval(m: &MonoidSpec) -> Result<Option<(usize, usize)>> {
    let w = Window::cube(m.dim(), 1).expect("positive bounds");
    if !super::factorial::classify_ohfm(m, &w).holds {
        return Err(Error::NotOhfm);
    }
    let map = face_ufm_map(m)?;
    assert!(map.is_interval, "non-UFM faces of an OHFM do not form an interval");
    Ok(map.interval)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[&[i64]]) -> MonoidSpec {
        MonoidSpec::generated(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn axis_monoid_faces() {
        let mm = m(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3]]);
        let d = face_submonoids(&mm).unwrap();
        assert_eq!(d.submonoids.len(), 4);
        let rays: Vec<_> = d.submonoids.iter().filter(|s| s.dim == 1).map(|s| s.atoms.clone()).collect();
        assert_eq!(rays, vec![vec![vec![0, 2], vec![0, 3]], vec![vec![2, 0], vec![3, 0]]]);
    }

    #[test]
    fn diagonal_is_not_divisor_closed() {
        let mm = m(&[&[2, 0], &[0, 2], &[1, 1]]);
        let w = Window::cube(2, 6).unwrap();
        let v = is_divisor_closed(&mm, &[vec![1, 1]], &w).unwrap();
        assert!(!v.holds);
        let wit = v.witness.unwrap();
        assert_eq!(wit.element, vec![2, 2]);
        assert!(verify_divisor_witness(&mm, &[vec![1, 1]], &wit));
        let all = vec![vec![2, 0], vec![0, 2], vec![1, 1]];
        assert!(is_divisor_closed(&mm, &all, &w).unwrap().holds);
        let axes = m(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3]]);
        assert!(is_divisor_closed(&axes, &[vec![2, 0], vec![3, 0]], &w).unwrap().holds);
    }

    #[test]
    fn interval_in_three_dimensions() {
        let mm = m(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2], &[0, 0, 3]]);
        let map = face_ufm_map(&mm).unwrap();
        assert_eq!(map.non_ufm.len(), 4);
        assert!(map.is_interval);
        let d = face_submonoids(&mm).unwrap();
        let (lo, hi) = map.interval.unwrap();
        assert_eq!(d.submonoids[lo].atoms, vec![vec![0, 0, 2], vec![0, 0, 3]]);
        assert_eq!(hi, d.lattice.top());
    }

    #[test]
    fn intervals_of_small_monoids() {
        assert_eq!(non_ufm_face_interval(&m(&[&[1, 0], &[0, 1]])).unwrap(), None);
        assert_eq!(non_ufm_face_interval(&m(&[&[2], &[3]])).unwrap(), Some((1, 1)));
        assert_eq!(non_ufm_face_interval(&m(&[&[2, 0], &[0, 2], &[1, 1]])), Err(Error::NotOhfm));
    }
}

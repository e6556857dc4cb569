//! Finitary certificates `n·M• ⊆ S + M` built from a triangulation of the
//! cone, and their verification by sampling.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::faces::face_submonoids;
use crate::cone::{cone_from_generators, triangulate, RationalCone, Triangulation};
use crate::error::{Error, Result};
use crate::exactarith::linalg::{QMatrix, QVector};
use crate::exactarith::rational::{bigint_to_i64, Rational};
use crate::grid;
use crate::monoid::{generated_atoms, MonoidSpec, Window};

/// Half-open parallelepiped data of one cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellTrace {
    pub rays: Vec<Vec<i64>>,
    /// Lattice points `Σ α_i v_i` with `0 ≤ α_i < 1`.
    pub parallelepiped: Vec<Vec<i64>>,
    /// Least `N` with `N·v ∈ Σ ℕ v_i` for every parallelepiped point `v`.
    pub n_t: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitaryCertificate {
    pub n: u64,
    pub s: Vec<Vec<i64>>,
    /// `max_T N_T·|Π_T ∩ ℤ^d|`.
    pub m: u64,
    pub cells: Vec<CellTrace>,
    pub triangulation: Triangulation,
}

/// Coordinates of `x` in the basis `rays` of their span, if `x` lies there.
fn barycentric(rays: &[QVector], x: &QVector) -> Option<Vec<Rational>> {
    let m = QMatrix::from_rows(rays.to_vec()).transpose();
    let a = m.solve(x)?;
    (m.mul_vec(&a) == *x).then_some(a.0)
}

fn cell_trace(rays: Vec<Vec<i64>>) -> CellTrace {
    let qs: Vec<QVector> = rays.iter().map(|r| QVector::from_ints(r)).collect();
    let corner = rays.iter().fold(vec![0i64; rays[0].len()], |acc, r| grid::add(&acc, r));
    let one = Rational::one();
    let mut parallelepiped = Vec::new();
    let mut n_t = BigInt::one();
    for p in grid::box_points(&corner) {
        let Some(alpha) = barycentric(&qs, &QVector::from_ints(&p)) else { continue };
        if alpha.iter().all(|a| !a.is_negative() && *a < one) {
            for a in &alpha {
                n_t = n_t.lcm(a.denom());
            }
            parallelepiped.push(p);
        }
    }
    CellTrace { rays, parallelepiped, n_t: bigint_to_i64(&n_t).expect("small index") as u64 }
}

/// Certificate with `S` the atoms of `M`.
pub fn finitary_certificate(m: &MonoidSpec) -> Result<FinitaryCertificate> {
    let atoms =
        generated_atoms(m).ok_or_else(|| Error::Invalid("certificates need a finitely generated monoid".into()))?;
    finitary_certificate_with(m, &atoms)
}

/// Certificate for a chosen `S ⊆ M•` with `cone(S) = cone(M)`: triangulate
/// on `S`, take `m = max_T N_T·|Π_T ∩ ℤ^d|` and `n = m·|T|`.
pub fn finitary_certificate_with(m: &MonoidSpec, s: &[Vec<i64>]) -> Result<FinitaryCertificate> {
    let g = m.as_generated().ok_or_else(|| Error::Invalid("certificates need a finitely generated monoid".into()))?;
    let mut s = s.to_vec();
    s.sort();
    s.dedup();
    if s.is_empty() || s.iter().any(|x| !x.iter().any(|&v| v != 0) || !m.contains(x)) {
        return Err(Error::Invalid("S must be a nonempty subset of M•".into()));
    }
    let qs: Vec<QVector> = s.iter().map(|x| QVector::from_ints(x)).collect();
    let cone = cone_from_generators(&qs)?;
    let full = RationalCone::hull(g.dim(), &g.generators().iter().map(|x| QVector::from_ints(x)).collect::<Vec<_>>())?;
    if cone != full {
        return Err(Error::GeneratorsInsufficient("cone(S) differs from cone(M)".into()));
    }
    let triangulation = triangulate(&cone, &qs)?;
    let cells: Vec<CellTrace> =
        triangulation.cells.iter().map(|c| cell_trace(c.ray_indices.iter().map(|&i| s[i].clone()).collect())).collect();
    let m_value = cells.iter().map(|c| c.n_t * c.parallelepiped.len() as u64).max().unwrap_or(1);
    let n = m_value * cells.len() as u64;
    let cert = FinitaryCertificate { n, s, m: m_value, cells, triangulation };
    check_trace(&cert)?;
    Ok(cert)
}

/// Re-verifies `N_T·v ∈ Σ ℕ v_i` for every recorded parallelepiped point and
/// the arithmetic `n = m·|T|`.
pub fn check_trace(cert: &FinitaryCertificate) -> Result<()> {
    for c in &cert.cells {
        let qs: Vec<QVector> = c.rays.iter().map(|r| QVector::from_ints(r)).collect();
        let nt = Rational::from_integer(BigInt::from(c.n_t));
        for v in &c.parallelepiped {
            let ok = barycentric(&qs, &QVector::from_ints(v))
                .is_some_and(|a| a.iter().all(|x| !x.is_negative() && (x * &nt).is_integer()));
            if !ok {
                return Err(Error::CertificateInvalid(format!("{} · {v:?} is not in the cell semigroup", c.n_t)));
            }
        }
    }
    let m = cert.cells.iter().map(|c| c.n_t * c.parallelepiped.len() as u64).max().unwrap_or(1);
    if m != cert.m || cert.n != m * cert.cells.len() as u64 {
        return Err(Error::CertificateInvalid("n differs from m·|T|".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinitaryVerdict {
    pub n: u64,
    pub trials: usize,
    pub window: Window,
}

/// Samples `trials` tuples of `n` elements of `M• ∩ w` and checks each sum
/// lies in `S + M`. A tuple passes as soon as one element `x` has `x − s ∈ M`
/// for some `s ∈ S`; otherwise the whole sum is tested.
pub fn verify_finitary(
    m: &MonoidSpec,
    s: &[Vec<i64>],
    n: u64,
    w: &Window,
    trials: usize,
    seed: u64,
) -> Result<FinitaryVerdict> {
    let table = m.member_table(&w.bounds);
    let member = |x: &[i64]| *table.get(x).unwrap_or(&false);
    let elements: Vec<Vec<i64>> = w.points().into_iter().filter(|p| p.iter().any(|&v| v != 0) && member(p)).collect();
    let verdict = FinitaryVerdict { n, trials, window: w.clone() };
    if elements.is_empty() {
        return Ok(verdict);
    }
    let covered: Vec<bool> =
        elements.iter().map(|x| s.iter().any(|t| grid::leq(t, x) && member(&grid::sub(x, t)))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let mut tuple = Vec::new();
        let mut passed = false;
        for _ in 0..n {
            let i = rng.gen_range(0..elements.len());
            if covered[i] {
                passed = true;
                break;
            }
            tuple.push(i);
        }
        if passed {
            continue;
        }
        let sum = tuple.iter().fold(vec![0i64; m.dim()], |acc, &i| grid::add(&acc, &elements[i]));
        if !s.iter().any(|t| grid::leq(t, &sum) && m.contains(&grid::sub(&sum, t))) {
            let shown: Vec<&Vec<i64>> = tuple.iter().map(|&i| &elements[i]).collect();
            return Err(Error::CertificateInvalid(format!("trial {trial}: sum of {shown:?} is not in S + M")));
        }
    }
    Ok(verdict)
}

pub fn verify_finitary_certificate(
    m: &MonoidSpec,
    cert: &FinitaryCertificate,
    w: &Window,
    trials: usize,
    seed: u64,
) -> Result<FinitaryVerdict> {
    check_trace(cert)?;
    verify_finitary(m, &cert.s, cert.n, w, trials, seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Inheritance {
    Finitary,
    WeaklyFinitary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InheritedCertificate {
    pub face: usize,
    pub s: Vec<Vec<i64>>,
    pub n: u64,
}

/// Restricts the certificate of `M` to every face submonoid `N = M ∩ F` with
/// `S_F = S ∩ F`, and verifies `n·N• ⊆ S_F + N` (finitary, sampled) or
/// `n·x ∈ S_F + N` for all `x ∈ N• ∩ w` (weakly finitary, exhaustive).
pub fn face_submonoids_inherit(
    m: &MonoidSpec,
    property: Inheritance,
    w: &Window,
    trials: usize,
    seed: u64,
) -> Result<Vec<InheritedCertificate>> {
    let cert = finitary_certificate(m)?;
    let data = face_submonoids(m)?;
    let mut out = Vec::with_capacity(data.submonoids.len());
    for sub in &data.submonoids {
        let normal = &data.lattice.faces[sub.face].supporting_normal;
        let s_f: Vec<Vec<i64>> =
            cert.s.iter().filter(|x| QVector::from_ints(x).dot(normal).is_zero()).cloned().collect();
        let n_mon = sub.monoid(m.dim());
        match property {
            Inheritance::Finitary => {
                verify_finitary(&n_mon, &s_f, cert.n, w, trials, seed)?;
            }
            Inheritance::WeaklyFinitary => {
                for x in w.points() {
                    if !x.iter().any(|&v| v != 0) || !n_mon.contains(&x) {
                        continue;
                    }
                    let nx: Vec<i64> = x.iter().map(|v| v * cert.n as i64).collect();
                    if !s_f.iter().any(|t| grid::leq(t, &nx) && n_mon.contains(&grid::sub(&nx, t))) {
                        return Err(Error::CertificateInvalid(format!("{} · {x:?} is not in S_F + N", cert.n)));
                    }
                }
            }
        }
        out.push(InheritedCertificate { face: sub.face, s: s_f, n: cert.n });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[&[i64]]) -> MonoidSpec {
        MonoidSpec::generated(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn free_monoid_certificate() {
        let f = m(&[&[1, 0], &[0, 1]]);
        let c = finitary_certificate(&f).unwrap();
        assert_eq!((c.n, c.m, c.cells.len()), (1, 1, 1));
        assert_eq!(c.cells[0].parallelepiped, vec![vec![0, 0]]);
        verify_finitary_certificate(&f, &c, &Window::cube(2, 10).unwrap(), 100, 1).unwrap();
    }

    #[test]
    fn two_two_certificate() {
        let mm = m(&[&[2, 0], &[0, 2], &[1, 1]]);
        let c = finitary_certificate(&mm).unwrap();
        // cells {(0,2),(1,1)} and {(1,1),(2,0)}, each of index 2 with Π = {0, (1,1)·…}
        assert_eq!(c.cells.len(), 2);
        for cell in &c.cells {
            assert_eq!(cell.parallelepiped.len(), 2);
            assert_eq!(cell.n_t, 2);
        }
        assert_eq!(c.n, 8);
        verify_finitary_certificate(&mm, &c, &Window::cube(2, 30).unwrap(), 1000, 7).unwrap();
    }

    #[test]
    fn corrupted_certificate_fails() {
        let ns = m(&[&[2], &[3]]);
        let c = finitary_certificate_with(&ns, &[vec![3]]).unwrap();
        assert_eq!(c.n, 9);
        let w = Window::cube(1, 30).unwrap();
        verify_finitary_certificate(&ns, &c, &w, 500, 3).unwrap();
        // n = 3 is least for S = {3}: 2 + 2 − 3 = 1 is not in M
        verify_finitary(&ns, &[vec![3]], 3, &w, 500, 3).unwrap();
        let err = verify_finitary(&ns, &[vec![3]], 2, &w, 2000, 3).unwrap_err();
        assert!(matches!(err, Error::CertificateInvalid(ref s) if s.contains("[[2], [2]]")), "{err}");
    }

    #[test]
    fn inheritance_on_axes() {
        let mm = m(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3]]);
        let w = Window::cube(2, 12).unwrap();
        let r = face_submonoids_inherit(&mm, Inheritance::Finitary, &w, 200, 5).unwrap();
        assert_eq!(r.len(), 4);
        face_submonoids_inherit(&mm, Inheritance::WeaklyFinitary, &w, 0, 0).unwrap();
    }
}

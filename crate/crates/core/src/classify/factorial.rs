//! Geometric tests for unique, half- and other-half-factoriality, with
//! witnesses built from linear relations among atoms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{atom_data, EvidenceStatus};
use crate::exactarith::linalg::{independent_subset, rank_of, solve_common_hyperplane, QMatrix, QVector};
use crate::exactarith::rational::{bigint_to_i64, Rational};
use crate::factorization::{length_table, verify_witness, Factorization, Property, Witness};
use crate::monoid::{MonoidSpec, Window};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    #[serde(flatten)]
    pub status: EvidenceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// `u` with `⟨a, u⟩ = 1` on every atom (HFM only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperplane: Option<QVector>,
    /// Dimension of the atom simplex (OHFM only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplex_dim: Option<usize>,
}

impl Verdict {
    fn new(property: Property, holds: bool, status: EvidenceStatus) -> Self {
        Self { property, holds, status, witness: None, hyperplane: None, simplex_dim: None }
    }
}

/// Turns `Σ c_i a_i = 0` into two factorizations of one element: the positive
/// part against the negative part, after clearing denominators.
pub(crate) fn relation_witness(atoms: &[Vec<i64>], coeffs: &[Rational]) -> Witness {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let side = |positive: bool| {
        Factorization::from_parts(atoms.iter().zip(&scaled).filter_map(|(a, k)| {
            let k = if positive { k.clone() } else { -k };
            k.is_positive().then(|| (a.clone(), bigint_to_i64(&k).expect("small coefficient") as u64))
        }))
    };
    let first = side(true);
    let second = side(false);
    let element = first.value(atoms.first().map_or(0, Vec::len));
    Witness { element, first, second }
}

fn qvecs(atoms: &[Vec<i64>]) -> Vec<QVector> {
    atoms.iter().map(|a| QVector::from_ints(a)).collect()
}

/// Expresses every atom outside a maximal independent subset `B` in terms of
/// `B`, yielding `(a, q)` with `a = Σ q_i b_i`.
fn dependencies(atoms: &[Vec<i64>]) -> (Vec<usize>, Vec<(usize, Vec<Rational>)>) {
    let vs = qvecs(atoms);
    let basis = independent_subset(&vs);
    if basis.is_empty() {
        return (basis, Vec::new());
    }
    let m = QMatrix::from_rows(basis.iter().map(|&i| vs[i].clone()).collect()).transpose();
    let deps = (0..atoms.len())
        .filter(|i| !basis.contains(i))
        .map(|i| (i, m.solve(&vs[i]).expect("atom lies in the span of a maximal independent set").0))
        .collect();
    (basis, deps)
}

/// Coefficient vector of `a − Σ q_i b_i` over all atoms.
fn relation(n: usize, basis: &[usize], a: usize, q: &[Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n];
    c[a] = Rational::one();
    for (&b, qi) in basis.iter().zip(q) {
        c[b] -= qi;
    }
    c
}

fn refuted(m: &MonoidSpec, property: Property, witness: Witness) -> Verdict {
    assert!(verify_witness(m, property, &witness), "constructed {property:?} witness does not verify: {witness:?}");
    let mut v = Verdict::new(property, false, EvidenceStatus::RefutedWithWitness);
    v.witness = Some(witness);
    v
}

/// UFM iff the number of atoms equals the rank. A dependency among atoms
/// gives an element with two factorizations.
pub fn classify_ufm(m: &MonoidSpec, w: &Window) -> Verdict {
    let (atoms, complete) = atom_data(m, w);
    let (basis, deps) = dependencies(&atoms);
    if let Some((a, q)) = deps.first() {
        let c = relation(atoms.len(), &basis, *a, q);
        return refuted(m, Property::Ufm, relation_witness(&atoms, &c));
    }
    let status = if complete { EvidenceStatus::Proved } else { EvidenceStatus::WindowEvidence { window: w.clone() } };
    Verdict::new(Property::Ufm, true, status)
}

/// HFM iff the atoms lie on an affine hyperplane missing the origin. Without
/// one, some atom `a = Σ q_i b_i` has `Σ q_i ≠ 1`, and the relation yields two
/// factorizations of different lengths.
pub fn classify_hfm(m: &MonoidSpec, w: &Window) -> Verdict {
    let (atoms, complete) = atom_data(m, w);
    let u = if atoms.is_empty() { Some(QVector::zeros(m.dim())) } else { solve_common_hyperplane(&qvecs(&atoms)) };
    match u {
        Some(u) => {
            if let Some(x) = length_functional_violation(&atoms, &u, w) {
                panic!("lengths of {x:?} disagree with the hyperplane functional");
            }
            let status =
                if complete { EvidenceStatus::Proved } else { EvidenceStatus::WindowEvidence { window: w.clone() } };
            let mut v = Verdict::new(Property::Hfm, true, status);
            v.hyperplane = Some(u);
            v
        }
        None => {
            let (basis, deps) = dependencies(&atoms);
            let one = Rational::one();
            let (a, q) = deps
                .iter()
                .find(|(_, q)| q.iter().sum::<Rational>() != one)
                .expect("some atom leaves the hyperplane through the basis");
            let c = relation(atoms.len(), &basis, *a, q);
            refuted(m, Property::Hfm, relation_witness(&atoms, &c))
        }
    }
}

/// First window point whose set of lengths is not `{⟨x, u⟩}`.
pub fn length_functional_violation(atoms: &[Vec<i64>], u: &QVector, w: &Window) -> Option<Vec<i64>> {
    let t = length_table(atoms, &w.bounds);
    w.points().into_iter().find(|x| {
        let ls = t.get(x).unwrap();
        if ls.is_empty() {
            return false;
        }
        let value = QVector::from_ints(x).dot(u);
        ls.len() != 1 || Rational::from_integer(BigInt::from(*ls.first().unwrap())) != value
    })
}

/// OHFM iff the atoms are affinely independent. An affine dependency
/// `Σ c_i a_i = 0`, `Σ c_i = 0` yields two factorizations of equal length.
pub fn classify_ohfm(m: &MonoidSpec, w: &Window) -> Verdict {
    let (atoms, complete) = atom_data(m, w);
    let lifted: Vec<QVector> = atoms
        .iter()
        .map(|a| {
            let mut v = a.clone();
            v.push(1);
            QVector::from_ints(&v)
        })
        .collect();
    if rank_of(&lifted) == atoms.len() {
        let status =
            if complete { EvidenceStatus::Proved } else { EvidenceStatus::WindowEvidence { window: w.clone() } };
        let mut v = Verdict::new(Property::Ohfm, true, status);
        v.simplex_dim = Some(atoms.len().saturating_sub(1));
        return v;
    }
    let columns = QMatrix::from_rows(lifted).transpose();
    let c = columns.nullspace().into_iter().next().expect("dependent columns have a kernel");
    refuted(m, Property::Ohfm, relation_witness(&atoms, c.coords()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[&[i64]]) -> MonoidSpec {
        MonoidSpec::generated(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn w(d: usize) -> Window {
        Window::cube(d, 8).unwrap()
    }

    #[test]
    fn two_two_monoid() {
        let mm = m(&[&[2, 0], &[0, 2], &[1, 1]]);
        let u = classify_ufm(&mm, &w(2));
        assert!(!u.holds);
        assert_eq!(u.witness.unwrap().element, vec![2, 2]);
        let h = classify_hfm(&mm, &w(2));
        assert!(h.holds);
        assert_eq!(h.status, EvidenceStatus::Proved);
        assert_eq!(h.hyperplane.unwrap(), QVector::new(vec![Rational::new(1.into(), 2.into()); 2]));
        let o = classify_ohfm(&mm, &w(2));
        assert!(!o.holds);
        assert_eq!(o.witness.unwrap().element, vec![2, 2]);
    }

    #[test]
    fn numerical_monoids() {
        let ns = m(&[&[2], &[3]]);
        assert!(!classify_ufm(&ns, &w(1)).holds);
        let h = classify_hfm(&ns, &w(1));
        assert!(!h.holds);
        let wit = h.witness.unwrap();
        assert_eq!(wit.element, vec![6]);
        assert_ne!(wit.first.length(), wit.second.length());
        assert!(classify_ohfm(&ns, &w(1)).holds);
        assert!(!classify_ohfm(&m(&[&[3], &[4], &[5]]), &Window::cube(1, 20).unwrap()).holds);
    }

    #[test]
    fn free_monoid() {
        let f = m(&[&[1, 0], &[0, 1]]);
        let u = classify_ufm(&f, &w(2));
        assert!(u.holds);
        assert_eq!(u.status, EvidenceStatus::Proved);
        assert_eq!(classify_ohfm(&f, &w(2)).simplex_dim, Some(1));
    }

    #[test]
    fn four_atom_axes() {
        let mm = m(&[&[2, 0], &[3, 0], &[0, 2], &[0, 3]]);
        let o = classify_ohfm(&mm, &w(2));
        assert!(!o.holds);
        assert!(verify_witness(&mm, Property::Ohfm, o.witness.as_ref().unwrap()));
    }

    #[test]
    fn polytopal_monoid_is_half_factorial() {
        // unit square at height one
        let mm = m(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        let h = classify_hfm(&mm, &Window::cube(3, 4).unwrap());
        assert!(h.holds);
        assert_eq!(h.hyperplane.unwrap(), QVector::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn window_monoid_refutation() {
        let q = MonoidSpec::builtin("open-quadrant").unwrap();
        let u = classify_ufm(&q, &Window::cube(2, 4).unwrap());
        assert!(!u.holds);
        assert_eq!(u.status, EvidenceStatus::RefutedWithWitness);
    }
}

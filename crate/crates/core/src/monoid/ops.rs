//! Atoms, rank and divisors.

use serde::Serialize;

use super::spec::MonoidSpec;
use super::window::{BoxTable, Window};
use crate::error::{Error, Result};
use crate::exactarith::linalg::{rank_of, QVector};
use crate::grid;

/// Atoms of `M` found on a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomReport {
    /// Sorted lexicographically.
    pub atoms: Vec<Vec<i64>>,
    /// True when the list is the whole atom set of `M`.
    pub complete: bool,
    pub window: Window,
    /// `(x, a)` for every nonzero non-atom window member `x`, with `a` an atom
    /// and `x − a ∈ M•`.
    #[serde(skip)]
    pub decompositions: Vec<(Vec<i64>, Vec<i64>)>,
}

/// Atoms of a generated monoid: generators `g` admitting no other generator
/// `h ≤ g` with `g − h ∈ M`.
pub fn generated_atoms(m: &MonoidSpec) -> Option<Vec<Vec<i64>>> {
    let g = m.as_generated()?;
    Some(
        g.generators()
            .iter()
            .filter(|x| !g.generators().iter().any(|h| h != *x && grid::leq(h, x) && g.contains(&grid::sub(x, h))))
            .cloned()
            .collect(),
    )
}

/// Atoms of `M ∩ w`. Atom status is exact on the window because both parts of
/// a decomposition are componentwise below the element.
pub fn atoms(m: &MonoidSpec, w: &Window) -> AtomReport {
    let table = m.member_table(&w.bounds);
    atoms_with_table(m, w, &table)
}

pub fn atoms_with_table(m: &MonoidSpec, w: &Window, table: &BoxTable<bool>) -> AtomReport {
    let known = generated_atoms(m);
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut decompositions = Vec::new();
    let member = |x: &[i64]| *table.get(x).unwrap_or(&false);
    for x in table.points() {
        if !w.contains(&x) || x.iter().all(|&v| v == 0) || !member(&x) {
            continue;
        }
        let candidates = known.as_deref().unwrap_or(&found);
        let split = candidates.iter().find(|a| *a != &x && grid::leq(a, &x) && member(&grid::sub(&x, a)));
        match split {
            Some(a) => decompositions.push((x, a.clone())),
            None => found.push(x),
        }
    }
    let complete = known.is_some();
    let mut atoms = known.unwrap_or(found);
    atoms.sort();
    AtomReport { atoms, complete, window: w.clone(), decompositions }
}

/// Rank of the lattice spanned by `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rank {
    pub value: usize,
    /// False for window monoids, where the value is a lower bound.
    pub exact: bool,
}

pub fn rank(m: &MonoidSpec, w: &Window) -> Rank {
    if let Some(g) = m.as_generated() {
        let gens: Vec<QVector> = g.generators().iter().map(|x| QVector::from_ints(x)).collect();
        return Rank { value: rank_of(&gens), exact: true };
    }
    let table = m.member_table(&w.bounds);
    let members: Vec<QVector> = table
        .points()
        .into_iter()
        .filter(|x| w.contains(x) && *table.get(x).unwrap())
        .map(|x| QVector::from_ints(&x))
        .collect();
    Rank { value: rank_of(&members), exact: false }
}

/// All `y ∈ M` with `x − y ∈ M`, in lexicographic order.
pub fn divisors(m: &MonoidSpec, x: &[i64]) -> Result<Vec<Vec<i64>>> {
    if !m.contains(x) {
        return Err(Error::NotAMember(format!("{x:?}")));
    }
    let table = m.member_table(x);
    Ok(table.points().into_iter().filter(|y| *table.get(y).unwrap() && *table.get(&grid::sub(x, y)).unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(gens: &[&[i64]]) -> MonoidSpec {
        MonoidSpec::generated(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn atoms_of_generated() {
        let r = atoms(&m(&[&[2, 0], &[0, 2], &[1, 1], &[3, 1]]), &Window::cube(2, 4).unwrap());
        assert_eq!(r.atoms, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert!(r.complete);
        for (x, a) in &r.decompositions {
            assert!(grid::leq(a, x) && a != x);
        }
    }

    #[test]
    fn open_quadrant_atoms() {
        let q = MonoidSpec::builtin("open-quadrant").unwrap();
        let r = atoms(&q, &Window::cube(2, 6).unwrap());
        assert!(!r.complete);
        let expected: Vec<Vec<i64>> = grid::box_points(&[6, 6])
            .into_iter()
            .filter(|p| p[0] >= 1 && p[1] >= 1 && (p[0] == 1 || p[1] == 1))
            .collect();
        assert_eq!(r.atoms, expected);
    }

    #[test]
    fn divisors_of_two_two() {
        let d = divisors(&m(&[&[2, 0], &[0, 2], &[1, 1]]), &[2, 2]).unwrap();
        assert_eq!(d, vec![vec![0, 0], vec![0, 2], vec![1, 1], vec![2, 0], vec![2, 2]]);
        let q = MonoidSpec::builtin("open-quadrant").unwrap();
        assert_eq!(divisors(&q, &[2, 2]).unwrap(), vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert_eq!(divisors(&q, &[0, 0]).unwrap(), vec![vec![0, 0]]);
        assert!(matches!(divisors(&q, &[0, 2]), Err(Error::NotAMember(_))));
    }

    #[test]
    fn ranks() {
        let w = Window::cube(2, 4).unwrap();
        assert_eq!(rank(&m(&[&[2, 0], &[0, 2], &[1, 1]]), &w).value, 2);
        assert_eq!(rank(&m(&[&[2], &[3]]), &Window::cube(1, 4).unwrap()).value, 1);
        let l = MonoidSpec::Leamer(super::super::spec::leamer(&[11, 12, 15], 2).unwrap());
        assert_eq!(rank(&l, &Window::new(vec![60, 6]).unwrap()), Rank { value: 2, exact: false });
    }
}

//! Factorizations into atoms, sets of lengths, and window sweeps deciding
//! unique, half- and other-half-factoriality on finite windows.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid;
use crate::monoid::{atoms, generated_atoms, BoxTable, MonoidSpec, Window};

/// A multiset of atoms, stored as `(atom, multiplicity)` pairs sorted by atom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factorization {
    pub parts: Vec<(Vec<i64>, u64)>,
}

impl Factorization {
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Builds a factorization from atom/multiplicity pairs, merging repeats and
    /// dropping zero multiplicities.
    pub fn from_parts(parts: impl IntoIterator<Item = (Vec<i64>, u64)>) -> Self {
        let mut merged: Vec<(Vec<i64>, u64)> = Vec::new();
        let mut sorted: Vec<(Vec<i64>, u64)> = parts.into_iter().filter(|(_, k)| *k > 0).collect();
        sorted.sort();
        for (a, k) in sorted {
            match merged.last_mut() {
                Some((b, j)) if *b == a => *j += k,
                _ => merged.push((a, k)),
            }
        }
        Self { parts: merged }
    }

    pub fn length(&self) -> u64 {
        self.parts.iter().map(|(_, k)| k).sum()
    }

    /// The factored element.
    pub fn value(&self, dim: usize) -> Vec<i64> {
        let mut out = vec![0i64; dim];
        for (a, k) in &self.parts {
            for (o, x) in out.iter_mut().zip(a) {
                *o += x * *k as i64;
            }
        }
        out
    }
}

/// Enumerates factorizations over a fixed atom list inside a box.
///
/// `suffix[i]` marks the box points representable by atoms `i..`, which
/// prunes the depth-first search to branches that complete.
pub struct Factorizer {
    atoms: Vec<Vec<i64>>,
    suffix: Vec<BoxTable<bool>>,
}

impl Factorizer {
    pub fn new(atoms: &[Vec<i64>], bounds: &[i64]) -> Self {
        let mut atoms = atoms.to_vec();
        atoms.sort();
        let mut suffix: Vec<BoxTable<bool>> = Vec::with_capacity(atoms.len() + 1);
        let mut last = BoxTable::new(bounds, false);
        last.set(&vec![0; bounds.len()], true);
        suffix.push(last);
        for a in atoms.iter().rev() {
            let prev = suffix.last().unwrap();
            let mut t = prev.clone();
            for x in t.points() {
                if !*t.get(&x).unwrap() && grid::leq(a, &x) && *t.get(&grid::sub(&x, a)).unwrap() {
                    t.set(&x, true);
                }
            }
            suffix.push(t);
        }
        suffix.reverse();
        Self { atoms, suffix }
    }

    pub fn atoms(&self) -> &[Vec<i64>] {
        &self.atoms
    }

    pub fn is_factorable(&self, x: &[i64]) -> bool {
        *self.suffix[0].get(x).unwrap_or(&false)
    }

    /// All factorizations of `x`, in the order produced by choosing the
    /// multiplicity of atom `i` (ascending) before atom `i+1`.
    pub fn factorizations(&self, x: &[i64]) -> Vec<Factorization> {
        let mut out = Vec::new();
        if self.is_factorable(x) {
            let mut counts = vec![0u64; self.atoms.len()];
            self.dfs(0, x.to_vec(), &mut counts, &mut out);
        }
        out
    }

    fn dfs(&self, i: usize, rest: Vec<i64>, counts: &mut Vec<u64>, out: &mut Vec<Factorization>) {
        if i == self.atoms.len() {
            out.push(Factorization::from_parts(self.atoms.iter().cloned().zip(counts.iter().copied())));
            return;
        }
        let a = &self.atoms[i];
        let mut cur = rest;
        let mut k = 0u64;
        loop {
            if *self.suffix[i + 1].get(&cur).unwrap() {
                counts[i] = k;
                self.dfs(i + 1, cur.clone(), counts, out);
            }
            if !grid::leq(a, &cur) {
                break;
            }
            cur = grid::sub(&cur, a);
            k += 1;
        }
        counts[i] = 0;
    }
}

fn bounds_for(x: &[i64]) -> Vec<i64> {
    x.iter().map(|&v| v.max(1)).collect()
}

/// Atoms of `M` that can occur in a factorization of `x`.
fn atoms_below(m: &MonoidSpec, x: &[i64]) -> Vec<Vec<i64>> {
    match generated_atoms(m) {
        Some(a) => a.into_iter().filter(|a| grid::leq(a, x)).collect(),
        None => atoms(m, &Window::new(bounds_for(x)).expect("bounds are positive")).atoms,
    }
}

/// The set `Z(x)` of all factorizations of `x`.
pub fn factorizations(m: &MonoidSpec, x: &[i64]) -> Result<Vec<Factorization>> {
    if !m.contains(x) {
        return Err(Error::NotAMember(format!("{x:?}")));
    }
    Ok(Factorizer::new(&atoms_below(m, x), &bounds_for(x)).factorizations(x))
}

/// The set of lengths `L(x)`, sorted.
pub fn lengths(m: &MonoidSpec, x: &[i64]) -> Result<Vec<u64>> {
    Ok(factorizations(m, x)?.iter().map(Factorization::length).collect::<BTreeSet<_>>().into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Ufm,
    Hfm,
    Ohfm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum WindowStatus {
    HoldsOnWindow { window: Window },
    RefutedWithWitness { witness: Witness },
}

/// An element with two factorizations exhibiting a failure of a property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: Vec<i64>,
    pub first: Factorization,
    pub second: Factorization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowVerdict {
    pub property: Property,
    #[serde(flatten)]
    pub status: WindowStatus,
}

impl WindowVerdict {
    pub fn holds(&self) -> bool {
        matches!(self.status, WindowStatus::HoldsOnWindow { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.status {
            WindowStatus::RefutedWithWitness { witness } => Some(witness),
            WindowStatus::HoldsOnWindow { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForceReport {
    pub ufm: WindowVerdict,
    pub hfm: WindowVerdict,
    pub ohfm: WindowVerdict,
}

/// Sweeps `M ∩ w` in graded order and records the first failure of each
/// property. Refutations are global; "holds" only speaks for the window.
pub fn bruteforce_classify(m: &MonoidSpec, w: &Window) -> BruteForceReport {
    let atom_list = match generated_atoms(m) {
        Some(a) => a,
        None => atoms(m, w).atoms,
    };
    let fz = Factorizer::new(&atom_list, &w.bounds);
    let (mut ufm, mut hfm, mut ohfm) = (None, None, None);
    for x in w.points() {
        if ufm.is_some() && hfm.is_some() && ohfm.is_some() {
            break;
        }
        if !fz.is_factorable(&x) {
            continue;
        }
        let zs = fz.factorizations(&x);
        if zs.len() < 2 {
            continue;
        }
        let pair =
            |a: &Factorization, b: &Factorization| Witness { element: x.clone(), first: a.clone(), second: b.clone() };
        if ufm.is_none() {
            ufm = Some(pair(&zs[0], &zs[1]));
        }
        if hfm.is_none() {
            if let Some(z) = zs.iter().find(|z| z.length() != zs[0].length()) {
                hfm = Some(pair(&zs[0], z));
            }
        }
        if ohfm.is_none() {
            'outer: for (i, a) in zs.iter().enumerate() {
                for b in &zs[i + 1..] {
                    if a.length() == b.length() {
                        ohfm = Some(pair(a, b));
                        break 'outer;
                    }
                }
            }
        }
    }
    let verdict = |property, found: Option<Witness>| WindowVerdict {
        property,
        status: match found {
            Some(witness) => WindowStatus::RefutedWithWitness { witness },
            None => WindowStatus::HoldsOnWindow { window: w.clone() },
        },
    };
    BruteForceReport {
        ufm: verdict(Property::Ufm, ufm),
        hfm: verdict(Property::Hfm, hfm),
        ohfm: verdict(Property::Ohfm, ohfm),
    }
}

/// Sets of lengths of every box point over the given atoms, by dynamic
/// programming on `L(x) = ⋃_a (L(x − a) + 1)`. Non-members get the empty set.
pub fn length_table(atoms: &[Vec<i64>], bounds: &[i64]) -> BoxTable<BTreeSet<u64>> {
    let mut t: BoxTable<BTreeSet<u64>> = BoxTable::new(bounds, BTreeSet::new());
    t.set(&vec![0; bounds.len()], BTreeSet::from([0]));
    for x in t.points() {
        let mut ls = BTreeSet::new();
        for a in atoms {
            if grid::leq(a, &x) && a.iter().any(|&v| v != 0) {
                ls.extend(t.get(&grid::sub(&x, a)).unwrap().iter().map(|l| l + 1));
            }
        }
        if !ls.is_empty() {
            t.set(&x, ls);
        }
    }
    t
}

/// Is `a` an atom of `M`? Decided by scanning all `0 < y < a`.
pub fn is_atom(m: &MonoidSpec, a: &[i64]) -> bool {
    if a.iter().all(|&v| v == 0) || !m.contains(a) {
        return false;
    }
    let table = m.member_table(a);
    !table.points().into_iter().any(|y| {
        y.iter().any(|&v| v != 0) && y != a && *table.get(&y).unwrap() && *table.get(&grid::sub(a, &y)).unwrap()
    })
}

/// Re-checks a witness from scratch: both factorizations consist of atoms of
/// `M`, sum to the element and differ, and their lengths behave as the
/// property requires (any for UFM, different for HFM, equal for OHFM).
pub fn verify_witness(m: &MonoidSpec, property: Property, w: &Witness) -> bool {
    let dim = m.dim();
    let atoms_ok = w.first.parts.iter().chain(&w.second.parts).all(|(a, _)| is_atom(m, a));
    let sums_ok = w.first.value(dim) == w.element && w.second.value(dim) == w.element;
    let lengths_ok = match property {
        Property::Ufm => true,
        Property::Hfm => w.first.length() != w.second.length(),
        Property::Ohfm => w.first.length() == w.second.length(),
    };
    atoms_ok && sums_ok && w.first != w.second && lengths_ok
}

//! Exact vectors and matrices over ℚ.
//!
//! Elimination is fraction-free: every row is first scaled to integers and
//! the forward pass is Bareiss' one-step division scheme, so intermediate
//! entries stay bounded by minors of the input. Rational arithmetic only
//! appears during back substitution.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{common_denominator, format_rational, parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVector(pub Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        Self(v.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> QVector {
        QVector(self.0.iter().map(|x| -x).collect())
    }

    /// Squared Euclidean norm.
    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Primitive integer vector on the same ray.
    pub fn primitive(&self) -> QVector {
        QVector::from_bigints(&super::rational::primitive_integer(&self.0))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    /// Integer coordinates, if all coordinates are integers fitting `i64`.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(super::rational::to_i64).collect()
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Serialize for QVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map(QVector)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<QVector>,
    cols: usize,
}

impl QMatrix {
    pub fn new(rows: Vec<QVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.dim() == cols), "ragged matrix");
        Self { rows, cols }
    }

    /// Rows given as vectors; the column count is taken from the first row.
    pub fn from_rows(rows: Vec<QVector>) -> Self {
        let cols = rows.first().map_or(0, QVector::dim);
        Self::new(rows, cols)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| QVector::from_ints(r)).collect())
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> QMatrix {
        let rows = (0..self.cols).map(|j| QVector(self.rows.iter().map(|r| r[j].clone()).collect())).collect();
        QMatrix::new(rows, self.rows.len())
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        QVector(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn rank(&self) -> usize {
        Echelon::of(self).pivots.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<QVector> {
        Echelon::of(self).nullspace()
    }

    /// A particular solution of `A x = b` (free variables set to zero).
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        assert_eq!(b.dim(), self.nrows());
        let aug = QMatrix::new(
            self.rows
                .iter()
                .zip(&b.0)
                .map(|(r, bi)| {
                    let mut v = r.0.clone();
                    v.push(bi.clone());
                    QVector(v)
                })
                .collect(),
            self.cols + 1,
        );
        let ech = Echelon::of(&aug);
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols + 1];
        x[self.cols] = -Rational::one();
        ech.back_substitute(&mut x);
        x.pop();
        Some(QVector(x))
    }
}

/// Row echelon form with integer entries.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

impl Echelon {
    fn of(m: &QMatrix) -> Echelon {
        let cols = m.cols;
        let mut a: Vec<Vec<BigInt>> = m
            .rows
            .iter()
            .map(|r| {
                let den = common_denominator(&r.0);
                r.0.iter().map(|q| q.numer() * (&den / q.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..a.len() {
                for j in c + 1..cols {
                    let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    debug_assert!((&num % &prev).is_zero(), "inexact Bareiss step");
                    a[i][j] = num / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(pivots.len());
        Echelon { rows: a, pivots, cols }
    }

    /// Fills the pivot coordinates of `x` so that every echelon row vanishes,
    /// given the free coordinates already in place.
    fn back_substitute(&self, x: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots).rev() {
            let mut acc = Rational::zero();
            for j in p + 1..self.cols {
                if !row[j].is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[p] = -acc / Rational::from_integer(row[p].clone());
        }
    }

    fn nullspace(&self) -> Vec<QVector> {
        (0..self.cols)
            .filter(|c| !self.pivots.contains(c))
            .map(|free| {
                let mut x = vec![Rational::zero(); self.cols];
                x[free] = Rational::one();
                self.back_substitute(&mut x);
                QVector(x)
            })
            .collect()
    }
}

/// Rank of a matrix by fraction-free elimination.
pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

/// Rank of a list of vectors (as rows).
pub fn rank_of(vectors: &[QVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors.to_vec()).rank()
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_rank(points: &[QVector]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<QVector> = rest.iter().map(|p| p.sub(first)).collect();
    rank_of(&diffs)
}

/// Finds `u` with `⟨a, u⟩ = 1` for every point `a`: a common affine
/// hyperplane missing the origin, normalized to level one.
pub fn solve_common_hyperplane(points: &[QVector]) -> Option<QVector> {
    if points.is_empty() {
        return None;
    }
    let a = QMatrix::from_rows(points.to_vec());
    let ones = QVector(vec![Rational::one(); points.len()]);
    a.solve(&ones)
}

/// Linearly independent subset of `vectors`, chosen greedily in order.
/// Returns the chosen indices.
pub fn independent_subset(vectors: &[QVector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<QVector> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        basis.push(v.clone());
        if rank_of(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Determinant of a square matrix.
pub fn determinant(m: &QMatrix) -> Rational {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "determinant of a non-square matrix");
    let mut a: Vec<Vec<Rational>> = m.rows.iter().map(|r| r.0.clone()).collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactarith::rational::{int, rat};

    fn vs(rows: &[&[i64]]) -> Vec<QVector> {
        rows.iter().map(|r| QVector::from_ints(r)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of(&vs(&[&[2, 0], &[0, 2], &[1, 1]])), 2);
        assert_eq!(rank_of(&[]), 0);
        assert_eq!(QMatrix::new(vec![], 3).rank(), 0);
        // by hand: (3,0,0),(0,3,0),(0,0,2) are pivots, (0,0,3) reduces to 0
        assert_eq!(rank_of(&vs(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2], &[0, 0, 3]])), 3);
    }

    #[test]
    fn common_hyperplane_examples() {
        let u = solve_common_hyperplane(&vs(&[&[2, 0], &[0, 2], &[1, 1]])).unwrap();
        assert_eq!(u, QVector(vec![rat(1, 2), rat(1, 2)]));
        assert!(solve_common_hyperplane(&vs(&[&[1, 0], &[2, 0]])).is_none());
        // lattice points of a polygon lifted to height one
        let lifted = vs(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1], &[2, 1, 1]]);
        let u = solve_common_hyperplane(&lifted).unwrap();
        assert_eq!(u, QVector::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&vs(&[&[2, 0], &[0, 2], &[1, 1]])), 1);
        assert_eq!(affine_rank(&vs(&[&[4, 7]])), 0);
        assert_eq!(affine_rank(&vs(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2], &[0, 0, 3]])), 3);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = QMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).is_zero());
        }
        let b = QVector::from_ints(&[1, 3]);
        assert!(m.solve(&b).is_none());
        let b = QVector::from_ints(&[6, 12]);
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }

    #[test]
    fn determinant_small() {
        let m = QMatrix::from_int_rows(&[vec![0, 2], vec![1, 1]]);
        assert_eq!(determinant(&m), int(-2));
        let m = QMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(determinant(&m), int(0));
    }
}

//! Monoid representations and exact membership.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::window::BoxTable;
use crate::error::{Error, Result};
use crate::exactarith::linalg::QVector;
use crate::exactarith::quad::{compare_across_fields, compare_with_rational, QuadScalar};
use crate::exactarith::rational::rat;
use crate::grid;

/// Submonoid of ℕ^d generated by finitely many nonzero vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedMonoid {
    dim: usize,
    /// Sorted, deduplicated, nonzero.
    generators: Vec<Vec<i64>>,
}

impl GeneratedMonoid {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        for g in &generators {
            if g.len() != dim {
                return Err(Error::Invalid(format!("generator {g:?} is not {dim}-dimensional")));
            }
            if g.iter().any(|&x| x < 0) {
                return Err(Error::Invalid(format!("generator {g:?} has a negative entry")));
            }
        }
        let generators: Vec<Vec<i64>> =
            generators.into_iter().filter(|g| g.iter().any(|&x| x != 0)).collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Self { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let mut memo = HashMap::new();
        self.reach(x, &mut memo)
    }

    fn reach(&self, x: &[i64], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
        if x.iter().all(|&v| v == 0) {
            return true;
        }
        if x.iter().any(|&v| v < 0) {
            return false;
        }
        if let Some(&r) = memo.get(x) {
            return r;
        }
        let r = self.generators.iter().any(|g| grid::leq(g, x) && self.reach(&grid::sub(x, g), memo));
        memo.insert(x.to_vec(), r);
        r
    }

    /// For every box point: `-2` if not a member, `-1` for zero, otherwise
    /// the index of a generator `g` with `x − g` a member.
    pub fn decomposition_table(&self, bounds: &[i64]) -> BoxTable<i32> {
        let mut t = BoxTable::new(bounds, -2i32);
        for x in t.points() {
            if x.iter().all(|&v| v == 0) {
                t.set(&x, -1);
                continue;
            }
            let found = self
                .generators
                .iter()
                .position(|g| grid::leq(g, &x) && t.get(&grid::sub(&x, g)).is_some_and(|&v| v != -2));
            if let Some(i) = found {
                t.set(&x, i as i32);
            }
        }
        t
    }

    /// Generator multiplicities of one representation of `x`, read off a
    /// decomposition table.
    pub fn representation(&self, table: &BoxTable<i32>, x: &[i64]) -> Option<Vec<u64>> {
        let mut coeffs = vec![0u64; self.generators.len()];
        let mut cur = x.to_vec();
        loop {
            match *table.get(&cur)? {
                -2 => return None,
                -1 => return Some(coeffs),
                i => {
                    coeffs[i as usize] += 1;
                    cur = grid::sub(&cur, &self.generators[i as usize]);
                }
            }
        }
    }
}

/// Cofinite submonoid of ℕ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalMonoid {
    generators: Vec<i64>,
    frobenius: i64,
    #[serde(skip)]
    table: Vec<bool>,
}

impl NumericalMonoid {
    pub fn new(generators: Vec<i64>) -> Result<Self> {
        let mut generators: Vec<i64> = generators.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        generators.retain(|&g| g != 0);
        if generators.is_empty() || generators.iter().any(|&g| g < 0) {
            return Err(Error::Invalid("numerical monoid needs positive generators".into()));
        }
        if generators.iter().fold(0i64, |acc, &g| acc.gcd(&g)) != 1 {
            return Err(Error::Invalid("generators of a numerical monoid must have gcd 1".into()));
        }
        let bound = (generators[0] * generators[generators.len() - 1]) as usize + 1;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for x in 1..=bound {
            table[x] = generators.iter().any(|&g| g as usize <= x && table[x - g as usize]);
        }
        let frobenius = (0..=bound).rev().find(|&x| !table[x]).map_or(-1, |x| x as i64);
        Ok(Self { generators, frobenius, table })
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x > self.frobenius || self.table[x as usize])
    }
}

/// Region of a cone-window monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Region {
    /// `(m, n)` with `m ≥ 1` and `α·m < n < β·m`.
    Band { alpha: QuadScalar, beta: QuadScalar },
    /// `⟨x, u_i⟩ ≥ 0`, or `> 0` where `strict[i]` holds.
    Facets { normals: Vec<QVector>, strict: Vec<bool> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeWindowMonoid {
    dim: usize,
    region: Region,
    special_points: Vec<Vec<i64>>,
    exclusions: Vec<Vec<i64>>,
}

impl ConeWindowMonoid {
    /// Validates the origin and additive closure on a box of side 12.
    pub fn new(dim: usize, region: Region, special_points: Vec<Vec<i64>>, exclusions: Vec<Vec<i64>>) -> Result<Self> {
        if let Region::Facets { normals, strict } = &region {
            if normals.len() != strict.len() || normals.iter().any(|n| n.dim() != dim) {
                return Err(Error::Invalid("facet normals and strictness flags disagree".into()));
            }
        }
        if matches!(region, Region::Band { .. }) && dim != 2 {
            return Err(Error::Invalid("band monoids live in dimension 2".into()));
        }
        let m = Self { dim, region, special_points, exclusions };
        if !m.contains(&vec![0; dim]) {
            return Err(Error::Invalid("0 must be a member".into()));
        }
        check_closure(dim, |x| m.contains(x), 12)?;
        Ok(m)
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn in_region(&self, x: &[i64]) -> bool {
        match &self.region {
            Region::Band { alpha, beta } => {
                let (m, n) = (x[0], x[1]);
                if m < 1 {
                    return false;
                }
                let slope = rat(n, m);
                compare_with_rational(alpha, &slope) == Ordering::Less
                    && compare_with_rational(beta, &slope) == Ordering::Greater
            }
            Region::Facets { normals, strict } => {
                let q = QVector::from_ints(x);
                normals.iter().zip(strict).all(|(u, &s)| {
                    let v = q.dot(u);
                    if s {
                        v > num_traits::Zero::zero()
                    } else {
                        v >= num_traits::Zero::zero()
                    }
                })
            }
        }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.len() != self.dim || x.iter().any(|&v| v < 0) {
            return false;
        }
        if self.special_points.iter().any(|p| p == x) {
            return true;
        }
        if self.exclusions.iter().any(|p| p == x) {
            return false;
        }
        self.in_region(x)
    }
}

/// Every pair of members in the box `[0,side]^dim` sums to a member.
fn check_closure(dim: usize, member: impl Fn(&[i64]) -> bool, side: i64) -> Result<()> {
    let pts: Vec<Vec<i64>> = grid::box_points(&vec![side; dim]).into_iter().filter(|p| member(p)).collect();
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[i..] {
            let s = grid::add(x, y);
            if !member(&s) {
                return Err(Error::Invalid(format!("not closed under addition: {x:?} + {y:?}")));
            }
        }
    }
    Ok(())
}

/// Pairs `(x, n)` with `x, x+s, …, x+ns ∈ Γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeamerMonoid {
    gamma: NumericalMonoid,
    step: i64,
}

impl LeamerMonoid {
    pub fn gamma(&self) -> &NumericalMonoid {
        &self.gamma
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        let (x, n) = (p[0], p[1]);
        x >= 0 && n >= 0 && (0..=n).all(|i| self.gamma.contains(x + i * self.step))
    }
}

pub fn leamer(gamma: &[i64], step: i64) -> Result<LeamerMonoid> {
    let gamma = NumericalMonoid::new(gamma.to_vec())?;
    if step <= 0 || gamma.contains(step) {
        return Err(Error::StepInGamma);
    }
    Ok(LeamerMonoid { gamma, step })
}

/// `{0} ∪ {(m,n) : α < n/m < β}` for irrational `0 < α < β`.
pub fn band(alpha: QuadScalar, beta: QuadScalar) -> Result<ConeWindowMonoid> {
    if alpha.is_rational() || beta.is_rational() {
        return Err(Error::RationalBound);
    }
    if alpha.signum() != Ordering::Greater || compare_across_fields(&alpha, &beta) != Ordering::Less {
        return Err(Error::AlphaNotBelowBeta);
    }
    ConeWindowMonoid::new(2, Region::Band { alpha, beta }, vec![vec![0, 0]], Vec::new())
}

/// Value-semigroup data: explicit points in `[0,c₁]×[0,c₂]`, where `c` is the
/// conductor; membership elsewhere is read off the clamped point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointData {
    pub conductor: Vec<i64>,
    pub points: Vec<Vec<i64>>,
}

impl PointData {
    pub fn good_fig1() -> Self {
        serde_json::from_str(include_str!("../../data/good_fig1.json")).expect("bundled data parses")
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.iter().any(|&v| v < 0) {
            return false;
        }
        let clamped: Vec<i64> = x.iter().zip(&self.conductor).map(|(&v, &c)| v.min(c)).collect();
        self.points.binary_search(&clamped).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuiltIn {
    /// `{0} ∪ ℕ²_{>0}`.
    OpenQuadrant,
    /// `{0} ∪ {(n,m) : n,m ≥ 1, m ≤ 2ⁿ}`.
    Doubling,
    GoodFig1(PointData),
    /// Generated by the vectors of [`slope_sequence`].
    SlopeSequence,
}

impl BuiltIn {
    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "open-quadrant" => Ok(BuiltIn::OpenQuadrant),
            "doubling" => Ok(BuiltIn::Doubling),
            "good-fig1" => Ok(BuiltIn::GoodFig1(PointData::good_fig1())),
            "slope-sequence" => Ok(BuiltIn::SlopeSequence),
            _ => Err(Error::Invalid(format!("unknown built-in {tag:?}"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BuiltIn::OpenQuadrant => "open-quadrant",
            BuiltIn::Doubling => "doubling",
            BuiltIn::GoodFig1(_) => "good-fig1",
            BuiltIn::SlopeSequence => "slope-sequence",
        }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.len() != 2 || x.iter().any(|&v| v < 0) {
            return false;
        }
        let (a, b) = (x[0], x[1]);
        if a == 0 && b == 0 {
            return true;
        }
        match self {
            BuiltIn::OpenQuadrant => a > 0 && b > 0,
            BuiltIn::Doubling => a >= 1 && b >= 1 && (a >= 63 || b <= 1i64 << a),
            BuiltIn::GoodFig1(data) => data.contains(x),
            BuiltIn::SlopeSequence => {
                let gens: Vec<Vec<i64>> = slope_sequence(b).into_iter().map(|(p, q)| vec![p, q]).collect();
                GeneratedMonoid::new(2, gens).expect("valid generators").contains(x)
            }
        }
    }
}

/// `v₁ = (1,1)` and `v_{n+1}` the lexicographically least `(x,y)`, `x ≥ 1`,
/// with larger slope than `v_n` and `‖v_{n+1}‖² > n²‖v_n‖²`; all terms with
/// second coordinate at most `max_y`.
///
/// `x = 1` always admits a valid `y`, so the least choice has `x = 1`.
pub fn slope_sequence(max_y: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut v = (1i128, 1i128);
    let mut n = 1i128;
    while v.1 <= max_y as i128 {
        out.push((v.0 as i64, v.1 as i64));
        let bound = n * n * (v.0 * v.0 + v.1 * v.1);
        // least y with y·x_n > y_n and 1 + y² > bound
        let mut y = v.1 / v.0 + 1;
        let root = (bound as f64).sqrt() as i128;
        y = y.max(root.saturating_sub(2));
        while y * y < bound || y * v.0 <= v.1 {
            y += 1;
        }
        v = (1, y);
        n += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidSpec {
    Generated(GeneratedMonoid),
    ConeWindow(ConeWindowMonoid),
    Leamer(LeamerMonoid),
    BuiltIn(BuiltIn),
}

impl MonoidSpec {
    pub fn generated(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        Ok(MonoidSpec::Generated(GeneratedMonoid::new(dim, generators)?))
    }

    pub fn builtin(tag: &str) -> Result<Self> {
        Ok(MonoidSpec::BuiltIn(BuiltIn::from_tag(tag)?))
    }

    pub fn dim(&self) -> usize {
        match self {
            MonoidSpec::Generated(g) => g.dim(),
            MonoidSpec::ConeWindow(c) => c.dim(),
            MonoidSpec::Leamer(_) | MonoidSpec::BuiltIn(_) => 2,
        }
    }

    pub fn as_generated(&self) -> Option<&GeneratedMonoid> {
        match self {
            MonoidSpec::Generated(g) => Some(g),
            _ => None,
        }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.len() != self.dim() || x.iter().any(|&v| v < 0) {
            return false;
        }
        match self {
            MonoidSpec::Generated(g) => g.contains(x),
            MonoidSpec::ConeWindow(c) => c.contains(x),
            MonoidSpec::Leamer(l) => l.contains(x),
            MonoidSpec::BuiltIn(b) => b.contains(x),
        }
    }

    /// Membership of every point of the box `[0, bounds]`.
    pub fn member_table(&self, bounds: &[i64]) -> BoxTable<bool> {
        match self {
            MonoidSpec::Generated(g) => {
                let dec = g.decomposition_table(bounds);
                let mut t = BoxTable::new(bounds, false);
                for x in t.points() {
                    t.set(&x, *dec.get(&x).unwrap() != -2);
                }
                t
            }
            MonoidSpec::BuiltIn(BuiltIn::SlopeSequence) => {
                let gens = slope_sequence(bounds[1]).into_iter().map(|(p, q)| vec![p, q]).collect();
                MonoidSpec::generated(2, gens).expect("valid generators").member_table(bounds)
            }
            _ => {
                let mut t = BoxTable::new(bounds, false);
                for x in t.points() {
                    let m = self.contains(&x);
                    t.set(&x, m);
                }
                t
            }
        }
    }
}

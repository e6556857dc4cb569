//! Exact feasibility of small linear systems by Fourier–Motzkin elimination.
//!
//! Works over any ordered field implementing [`OrderedField`], so the same
//! routine decides cone membership for rational data and for vectors with
//! entries in a real quadratic field.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::quad::QuadScalar;
use super::rational::Rational;

pub trait OrderedField: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Sign compared to zero.
    fn sign(&self) -> Ordering;

    fn is_zero_value(&self) -> bool {
        self.sign() == Ordering::Equal
    }
}

impl OrderedField for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> Ordering {
        self.cmp(&Rational::zero())
    }
}

impl OrderedField for QuadScalar {
    fn zero_like(&self) -> Self {
        QuadScalar::rational(Rational::zero(), self.radicand()).expect("valid radicand")
    }
    fn one_like(&self) -> Self {
        QuadScalar::rational(Rational::one(), self.radicand()).expect("valid radicand")
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn sign(&self) -> Ordering {
        self.signum()
    }
}

/// A linear constraint `⟨coeffs, λ⟩ (= or ≥) rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint<F> {
    pub coeffs: Vec<F>,
    pub rhs: F,
}

impl<F: OrderedField> Constraint<F> {
    pub fn new(coeffs: Vec<F>, rhs: F) -> Self {
        Self { coeffs, rhs }
    }
}

/// Decides whether some `λ` satisfies all equalities and inequalities
/// (`≥`). Nonnegativity must be passed explicitly as inequalities.
pub fn feasible<F: OrderedField>(
    nvars: usize,
    equalities: &[Constraint<F>],
    inequalities: &[Constraint<F>],
    unit: &F,
) -> bool {
    let _ = unit;
    // Gaussian elimination on the equalities: each pivot variable gets
    // substituted away from the inequality system.
    let mut eqs: Vec<Constraint<F>> = equalities.to_vec();
    let mut ineqs: Vec<Constraint<F>> = inequalities.to_vec();
    let mut eliminated = vec![false; nvars];
    while let Some(eq) = eqs.pop() {
        let Some(pv) = eq.coeffs.iter().position(|c| !c.is_zero_value()) else {
            if !eq.rhs.is_zero_value() {
                return false;
            }
            continue;
        };
        eliminated[pv] = true;
        let pc = eq.coeffs[pv].clone();
        let substitute = |c: &mut Constraint<F>| {
            let f = c.coeffs[pv].div(&pc);
            if f.is_zero_value() {
                return;
            }
            for (ci, ei) in c.coeffs.iter_mut().zip(&eq.coeffs) {
                *ci = ci.sub(&f.mul(ei));
            }
            c.rhs = c.rhs.sub(&f.mul(&eq.rhs));
        };
        for c in eqs.iter_mut() {
            substitute(c);
        }
        for c in ineqs.iter_mut() {
            substitute(c);
        }
    }

    for var in 0..nvars {
        if eliminated[var] {
            continue;
        }
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for c in ineqs.drain(..) {
            match c.coeffs[var].sign() {
                Ordering::Greater => pos.push(c),
                Ordering::Less => neg.push(c),
                Ordering::Equal => rest.push(c),
            }
        }
        for p in &pos {
            for q in &neg {
                // p/p_v + q/|q_v| eliminates the variable
                let sp = p.coeffs[var].clone();
                let sq = q.coeffs[var].neg();
                let coeffs: Vec<F> = p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| a.div(&sp).add(&b.div(&sq))).collect();
                let rhs = p.rhs.div(&sp).add(&q.rhs.div(&sq));
                let c = Constraint::new(coeffs, rhs);
                if !rest.contains(&c) {
                    rest.push(c);
                }
            }
        }
        ineqs = rest;
        // trivially false constraints end the search early
        if ineqs.iter().any(|c| c.coeffs.iter().all(|x| x.is_zero_value()) && c.rhs.sign() == Ordering::Greater) {
            return false;
        }
    }
    // every variable is gone, so each row reads 0 ≥ rhs
    ineqs.iter().all(|c| c.rhs.sign() != Ordering::Greater)
}

/// Is `target` a nonnegative combination of `generators`?
pub fn in_conic_hull<F: OrderedField>(generators: &[Vec<F>], target: &[F]) -> bool {
    let Some(unit) = target.first().map(|t| t.one_like()) else {
        return true;
    };
    let m = generators.len();
    let d = target.len();
    let zero = unit.zero_like();
    let eqs: Vec<Constraint<F>> =
        (0..d).map(|i| Constraint::new(generators.iter().map(|g| g[i].clone()).collect(), target[i].clone())).collect();
    let nonneg: Vec<Constraint<F>> = (0..m)
        .map(|j| {
            let mut c = vec![zero.clone(); m];
            c[j] = unit.clone();
            Constraint::new(c, zero.clone())
        })
        .collect();
    feasible(m, &eqs, &nonneg, &unit)
}

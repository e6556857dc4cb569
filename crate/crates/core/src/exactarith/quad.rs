//! Elements `a + b·√n` of a real quadratic field with exact sign and
//! ordering.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    n: u64,
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational, n: u64) -> Result<Self> {
        if !is_squarefree(n) {
            return Err(Error::BadRadicand(n));
        }
        Ok(Self { a, b, n })
    }

    pub fn rational(a: Rational, n: u64) -> Result<Self> {
        Self::new(a, Rational::zero(), n)
    }

    /// `√n` itself.
    pub fn sqrt(n: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.n == 1
    }

    /// The rational value, if there is one.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else if self.n == 1 {
            Some(&self.a + &self.b)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    /// Exact sign, compared against zero.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: the larger of a² and b²n wins
        let a2 = &self.a * &self.a;
        let b2n = &self.b * &self.b * Rational::from_integer(BigInt::from(self.n));
        match a2.cmp(&b2n) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -&self.b, n: self.n }
    }

    /// `(a + b√n)(a − b√n) = a² − n b²`, a rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.n))
    }

    fn field_with(&self, other: &Self) -> u64 {
        if self.n == other.n || other.b.is_zero() {
            self.n
        } else if self.b.is_zero() {
            other.n
        } else {
            panic!("arithmetic across quadratic fields √{} and √{}", self.n, other.n)
        }
    }

    /// Exact comparison; errors when the radicands differ.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if self.n != other.n {
            return Err(Error::IncompatibleFields);
        }
        Ok((self - other).signum())
    }

    pub fn recip(&self) -> Self {
        let nm = self.norm();
        assert!(!nm.is_zero(), "division by zero in quadratic field");
        Self { a: &self.a / &nm, b: -&self.b / &nm, n: self.n }
    }
}

/// Exact ordering of two quadratic scalars sharing one radicand.
pub fn quad_compare(x: &QuadScalar, y: &QuadScalar) -> Result<Ordering> {
    x.try_cmp(y)
}

/// Compares a quadratic scalar with a rational.
pub fn compare_with_rational(x: &QuadScalar, q: &Rational) -> Ordering {
    let d = QuadScalar { a: &x.a - q, b: x.b.clone(), n: x.n };
    d.signum()
}

/// Rational interval `[lo, hi]` of width at most `2^-bits · |b|` containing `x`.
pub fn rational_bracket(x: &QuadScalar, bits: u32) -> (Rational, Rational) {
    if x.b.is_zero() {
        return (x.a.clone(), x.a.clone());
    }
    let r = BigInt::from(x.n).sqrt();
    let mut lo = Rational::from_integer(r.clone());
    let mut hi = Rational::from_integer(r + 1);
    let n = Rational::from_integer(BigInt::from(x.n));
    let two = Rational::from_integer(BigInt::from(2));
    for _ in 0..bits {
        let mid = (&lo + &hi) / &two;
        if &mid * &mid <= n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (l, h) = (&x.a + &x.b * &lo, &x.a + &x.b * &hi);
    if l <= h {
        (l, h)
    } else {
        (h, l)
    }
}

/// Exact ordering of scalars that may live in different quadratic fields.
/// Equal values across distinct fields must be rational, which is checked
/// first; otherwise brackets are refined until they separate.
pub fn compare_across_fields(x: &QuadScalar, y: &QuadScalar) -> Ordering {
    if x.n == y.n {
        return (x - y).signum();
    }
    if let Some(q) = x.to_rational() {
        return compare_with_rational(y, &q).reverse();
    }
    if let Some(q) = y.to_rational() {
        return compare_with_rational(x, &q);
    }
    let mut bits = 8;
    loop {
        let (xl, xh) = rational_bracket(x, bits);
        let (yl, yh) = rational_bracket(y, bits);
        if xh < yl {
            return Ordering::Less;
        }
        if yh < xl {
            return Ordering::Greater;
        }
        bits *= 2;
    }
}

/// Parses `p/q`, `sqrt(n)`, `sqrtN`, `c*sqrt(n)` and `a + c*sqrt(n)` (also
/// with `-`). A purely rational value gets radicand 1.
pub fn parse_quad(text: &str) -> Result<QuadScalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid quadratic number {text:?}"));
    let Some(at) = s.find("sqrt") else {
        return QuadScalar::rational(parse_rational(&s)?, 1);
    };
    let radical = &s[at + 4..];
    let digits = radical.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(radical);
    let n: u64 = digits.parse().map_err(|_| bad())?;
    let head = &s[..at];
    let head = head.strip_suffix('*').unwrap_or(head);
    // split `a±c` at the last sign that is not leading
    let split = head.char_indices().rev().find(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i);
    let (a, c) = match split {
        Some(i) => (&head[..i], &head[i..]),
        None => ("0", head),
    };
    let coeff = |t: &str| -> Result<Rational> {
        match t {
            "" | "+" => Ok(Rational::one()),
            "-" => Ok(-Rational::one()),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t)),
        }
    };
    QuadScalar::new(parse_rational(a)?, coeff(c)?, n)
}

impl serde::Serialize for QuadScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadScalar", 3)?;
        st.serialize_field("a", &format_rational(&self.a))?;
        st.serialize_field("b", &format_rational(&self.b))?;
        st.serialize_field("n", &self.n)?;
        st.end()
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(f, "{} + {}*sqrt({})", format_rational(&self.a), format_rational(&self.b), self.n)
        }
    }
}

impl Add for &QuadScalar {
    type Output = QuadScalar;
    fn add(self, o: &QuadScalar) -> QuadScalar {
        QuadScalar { n: self.field_with(o), a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &QuadScalar {
    type Output = QuadScalar;
    fn sub(self, o: &QuadScalar) -> QuadScalar {
        QuadScalar { n: self.field_with(o), a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &QuadScalar {
    type Output = QuadScalar;
    fn mul(self, o: &QuadScalar) -> QuadScalar {
        let n = self.field_with(o);
        let nq = Rational::from_integer(BigInt::from(n));
        QuadScalar { a: &self.a * &o.a + &self.b * &o.b * nq, b: &self.a * &o.b + &self.b * &o.a, n }
    }
}

impl Div for &QuadScalar {
    type Output = QuadScalar;
    fn div(self, o: &QuadScalar) -> QuadScalar {
        self * &o.recip()
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { a: -&self.a, b: -&self.b, n: self.n }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

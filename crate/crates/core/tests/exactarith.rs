use std::cmp::Ordering;

use monocone::exactarith::linalg::{rank_of, QMatrix, QVector};
use monocone::exactarith::quad::{compare_with_rational, quad_compare, QuadScalar};
use monocone::exactarith::rational::{format_rational, parse_rational, rat};
use monocone::exactarith::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// `⌊10^100 · (a + b√n)⌋` up to an error of `|b| + 1`, computed with integer
/// square roots only.
fn decimal_interval(a: &Rational, b: &Rational, n: u64) -> (BigInt, BigInt) {
    let scale = BigInt::from(10u32).pow(100);
    let root = (BigInt::from(n) * &scale * &scale).sqrt();
    let den = a.denom() * b.denom();
    let num = a.numer() * b.denom() * &scale + b.numer() * a.denom() * root;
    let err = b.numer().abs() * a.denom() + 1;
    ((&num - &err * 2) / &den - 1, (&num + &err * 2) / &den + 1)
}

fn oracle_cmp(x: (&Rational, &Rational), y: (&Rational, &Rational), n: u64) -> Option<Ordering> {
    if x == y {
        return Some(Ordering::Equal);
    }
    let (xl, xh) = decimal_interval(x.0, x.1, n);
    let (yl, yh) = decimal_interval(y.0, y.1, n);
    if xh < yl {
        Some(Ordering::Less)
    } else if yh < xl {
        Some(Ordering::Greater)
    } else {
        None
    }
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(p, q)| rat(p, q))
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..5, c), r))
}

proptest! {
    #[test]
    fn quad_compare_agrees_with_decimal_intervals(
        a1 in small_rat(), b1 in small_rat(), a2 in small_rat(), b2 in small_rat(),
        n in prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 11, 13])
    ) {
        let x = QuadScalar::new(a1.clone(), b1.clone(), n).unwrap();
        let y = QuadScalar::new(a2.clone(), b2.clone(), n).unwrap();
        let got = quad_compare(&x, &y).unwrap();
        let want = oracle_cmp((&a1, &b1), (&a2, &b2), n).expect("distinct quadratic numbers separate at 100 digits");
        prop_assert_eq!(got, want);
    }

    #[test]
    fn comparison_with_rationals_is_consistent(a in small_rat(), b in small_rat(), q in small_rat()) {
        let x = QuadScalar::new(a.clone(), b.clone(), 2).unwrap();
        let y = QuadScalar::rational(q.clone(), 2).unwrap();
        prop_assert_eq!(compare_with_rational(&x, &q), quad_compare(&x, &y).unwrap());
    }

    #[test]
    fn rank_is_invariant_under_row_operations(rows in int_matrix(), k in -3i64..4, seed in 0usize..16) {
        let vs: Vec<QVector> = rows.iter().map(|r| QVector::from_ints(r)).collect();
        let r = rank_of(&vs);
        prop_assert!(r <= rows.len().min(rows[0].len()));
        let mut w = vs.clone();
        w.reverse();
        prop_assert_eq!(rank_of(&w), r);
        if w.len() > 1 {
            let i = seed % w.len();
            let j = (i + 1) % w.len();
            let add = w[j].scale(&Rational::from_integer(k.into()));
            w[i] = w[i].add(&add);
            prop_assert_eq!(rank_of(&w), r);
        }
        prop_assert_eq!(QMatrix::from_rows(vs).transpose().rank(), r);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in int_matrix()) {
        let m = QMatrix::from_int_rows(&rows);
        let kernel = m.nullspace();
        prop_assert_eq!(kernel.len() + m.rank(), m.ncols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).0.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rationals_round_trip_through_strings(q in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}

#[test]
fn sqrt_two_brackets() {
    let s2 = QuadScalar::sqrt(2).unwrap();
    assert_eq!(compare_with_rational(&s2, &rat(141421356, 100000000)), Ordering::Greater);
    assert_eq!(compare_with_rational(&s2, &rat(141421357, 100000000)), Ordering::Less);
}

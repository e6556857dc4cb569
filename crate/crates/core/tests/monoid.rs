use monocone::monoid::{atoms, divisors, leamer, rank, slope_sequence, BuiltIn, MonoidSpec, PointData, Window};
use proptest::prelude::*;

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn closed_on(m: &MonoidSpec, side: i64) {
    let w = Window::cube(m.dim(), side).unwrap();
    let mem: Vec<Vec<i64>> = w.points().into_iter().filter(|p| m.contains(p)).collect();
    assert!(m.contains(&vec![0; m.dim()]));
    for a in &mem {
        for b in &mem {
            assert!(m.contains(&add(a, b)), "{a:?} + {b:?}");
        }
    }
}

#[test]
fn built_ins_are_closed() {
    for tag in ["open-quadrant", "doubling", "good-fig1", "slope-sequence"] {
        closed_on(&MonoidSpec::builtin(tag).unwrap(), 14);
    }
    closed_on(&MonoidSpec::Leamer(leamer(&[11, 12, 15], 2).unwrap()), 30);
}

#[test]
fn leamer_membership_is_definitional() {
    let l = leamer(&[11, 12, 15], 2).unwrap();
    let gamma = |v: i64| {
        (0..=v / 11).any(|i| (0..=v / 12).any(|j| (v - 11 * i - 12 * j) >= 0 && (v - 11 * i - 12 * j) % 15 == 0))
    };
    for x in 0..=60 {
        for n in 0..=6 {
            let want = (x, n) == (0, 0) || (x > 0 && (0..=n).all(|i| gamma(x + 2 * i)));
            assert_eq!(l.contains(&[x, n]), want, "({x}, {n})");
        }
    }
}

#[test]
fn good_fig1_data() {
    let d = PointData::good_fig1();
    assert_eq!(d.conductor, vec![29, 15]);
    let m = MonoidSpec::BuiltIn(BuiltIn::GoodFig1(d.clone()));
    for p in &d.points {
        assert!(m.contains(p));
    }
    // beyond the conductor membership is decided by the clamped point
    assert_eq!(m.contains(&[40, 15]), m.contains(&[29, 15]));
    assert!(m.contains(&[29, 15]));
    // rank: two independent members exist, and the ambient rank is two
    let r = rank(&m, &Window::cube(2, 30).unwrap());
    assert_eq!(r.value, 2);
}

#[test]
fn slope_sequence_starts_as_specified() {
    assert_eq!(slope_sequence(326), vec![(1, 1), (1, 2), (1, 5), (1, 16), (1, 65), (1, 326)]);
}

#[test]
fn open_quadrant_atoms() {
    let m = MonoidSpec::builtin("open-quadrant").unwrap();
    let r = atoms(&m, &Window::cube(2, 9).unwrap());
    assert!(!r.complete);
    assert!(r.atoms.iter().all(|a| a[0] == 1 || a[1] == 1));
    assert_eq!(r.atoms.len(), 17);
}

fn gens() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4).prop_flat_map(|d| {
        prop::collection::vec(
            prop::collection::vec(0i64..5, d).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
            1..6,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_monoids_are_closed(g in gens()) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g.clone()).unwrap();
        for a in &g {
            for b in &g {
                prop_assert!(m.contains(&add(a, b)));
            }
        }
    }

    #[test]
    fn divisors_lie_below(g in gens(), k in prop::collection::vec(0i64..3, 6)) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g.clone()).unwrap();
        let x = g.iter().zip(&k).fold(vec![0; d], |acc, (v, &c)| add(&acc, &v.iter().map(|t| t * c).collect::<Vec<_>>()));
        let ds = divisors(&m, &x).unwrap();
        prop_assert!(ds.contains(&x) && ds.contains(&vec![0; d]));
        for y in &ds {
            prop_assert!(y.iter().zip(&x).all(|(a, b)| a <= b));
            let z: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
            prop_assert!(m.contains(y) && m.contains(&z));
        }
    }

    #[test]
    fn window_atoms_are_irreducible(g in gens()) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g).unwrap();
        let w = Window::cube(d, 8).unwrap();
        let r = atoms(&m, &w);
        for a in &r.atoms {
            for y in monocone::grid::box_points(a) {
                let z: Vec<i64> = a.iter().zip(&y).map(|(p, q)| p - q).collect();
                let trivial = y.iter().all(|&v| v == 0) || z.iter().all(|&v| v == 0);
                prop_assert!(trivial || !(m.contains(&y) && m.contains(&z)));
            }
        }
    }
}

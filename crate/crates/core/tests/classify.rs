use monocone::classify::{
    classify_hfm, classify_ohfm, classify_primary, classify_ufm, face_submonoids, face_ufm_map, finitary_certificate,
    is_divisor_closed, mu, verify_divisor_witness, verify_finitary_certificate, EvidenceStatus,
};
use monocone::cone::verify_triangulation;
use monocone::factorization::{bruteforce_classify, verify_witness, Property};
use monocone::monoid::{MonoidSpec, Window};
use proptest::prelude::*;

fn gens() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4).prop_flat_map(|d| {
        prop::collection::vec(
            prop::collection::vec(0i64..6, d).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
            1..7,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn geometric_verdicts_match_brute_force(g in gens()) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g).unwrap();
        let w = Window::cube(d, 12).unwrap().with_max_sum(16);
        let brute = bruteforce_classify(&m, &w);
        let pairs = [
            (Property::Ufm, classify_ufm(&m, &w), brute.ufm.holds()),
            (Property::Hfm, classify_hfm(&m, &w), brute.hfm.holds()),
            (Property::Ohfm, classify_ohfm(&m, &w), brute.ohfm.holds()),
        ];
        for (p, v, b) in pairs {
            prop_assert_eq!(v.status == EvidenceStatus::Proved, v.holds);
            if let Some(wit) = &v.witness {
                prop_assert!(verify_witness(&m, p, wit));
            }
            // a refutation is global; a brute-force refutation must be matched
            if !b {
                prop_assert!(!v.holds, "{:?}: brute force refutes, geometry accepts", p);
            }
            if !v.holds && wit_fits(&v.witness, &w) {
                prop_assert!(!b, "{:?}: witness inside the window but brute force accepts", p);
            }
        }
    }

    #[test]
    fn faces_are_divisor_closed(g in gens()) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g).unwrap();
        let data = face_submonoids(&m).unwrap();
        let w = Window::cube(d, 10).unwrap();
        for s in &data.submonoids {
            let v = is_divisor_closed(&m, &s.generators, &w).unwrap();
            prop_assert!(v.holds, "face {} not divisor-closed: {:?}", s.face, v.witness);
            if let Some(wit) = v.witness {
                prop_assert!(verify_divisor_witness(&m, &s.generators, &wit));
            }
        }
        let map = face_ufm_map(&m).unwrap();
        prop_assert_eq!(map.ufm[data.lattice.top()], map.ufm.iter().all(|&u| u));
        if classify_ohfm(&m, &w).holds {
            prop_assert!(map.is_interval);
        }
    }

    #[test]
    fn certificates_verify(g in gens()) {
        let d = g[0].len();
        let m = MonoidSpec::generated(d, g).unwrap();
        let c = finitary_certificate(&m).unwrap();
        let cone = face_submonoids(&m).unwrap().cone;
        verify_triangulation(&cone, &c.triangulation).unwrap();
        verify_finitary_certificate(&m, &c, &Window::cube(d, 12).unwrap(), 200, 11).unwrap();
        if classify_ufm(&m, &Window::cube(d, 1).unwrap()).holds && c.s.iter().all(|a| a.iter().filter(|&&v| v != 0).count() == 1 && a.iter().sum::<i64>() == 1) {
            prop_assert_eq!(c.n, 1);
        }
    }
}

fn wit_fits(w: &Option<monocone::factorization::Witness>, win: &Window) -> bool {
    w.as_ref().is_some_and(|w| win.contains(&w.element))
}

#[test]
fn primary_and_mu_on_built_ins() {
    let q = MonoidSpec::builtin("open-quadrant").unwrap();
    let w = Window::cube(2, 14).unwrap();
    assert!(classify_primary(&q, &w).holds);
    for n in 1..=10 {
        let v = mu(&q, &[n, 1], 20, &w).unwrap();
        assert_eq!(v.value, n as u64 + 1);
        assert_eq!(v.status, EvidenceStatus::Proved);
    }
    let axes = MonoidSpec::generated(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
    let v = classify_primary(&axes, &w);
    assert!(!v.holds);
}

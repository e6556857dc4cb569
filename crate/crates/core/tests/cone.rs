use monocone::cone::{
    cone_from_generators, face_lattice, interior_simplex, triangulate, verify_interior_simplex, verify_triangulation,
    RationalCone,
};
use monocone::exactarith::linalg::{rank_of, QVector};
use monocone::exactarith::rational::rat;
use proptest::prelude::*;

fn gens() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4).prop_flat_map(|d| {
        prop::collection::vec(
            prop::collection::vec(0i64..5, d).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
            1..6,
        )
    })
}

fn qs(g: &[Vec<i64>]) -> Vec<QVector> {
    g.iter().map(|v| QVector::from_ints(v)).collect()
}

fn simplicial(k: usize) -> RationalCone {
    // independent rays in the positive orthant of ℚ^k
    let rays: Vec<QVector> = (0..k)
        .map(|i| QVector::from_ints(&(0..k).map(|j| if j == i { 2 } else { i64::from(j < i) }).collect::<Vec<_>>()))
        .collect();
    cone_from_generators(&rays).unwrap()
}

proptest! {
    #[test]
    fn hull_of_extreme_rays_round_trips(g in gens()) {
        let c = cone_from_generators(&qs(&g)).unwrap();
        let again = cone_from_generators(c.extreme_rays()).unwrap();
        prop_assert_eq!(&again, &c);
        for v in &qs(&g) {
            prop_assert!(c.contains(v));
        }
        for (i, f) in c.facets().iter().enumerate() {
            let tight = c.extreme_rays().iter().filter(|r| f.dot(r) == rat(0, 1)).count();
            prop_assert!(tight + 1 >= c.dim(), "facet {} has too few rays", i);
        }
    }

    #[test]
    fn face_lattice_meets_are_intersections(g in gens()) {
        let c = cone_from_generators(&qs(&g)).unwrap();
        let lat = face_lattice(&c).unwrap();
        for a in 0..lat.len() {
            prop_assert!(lat.leq(lat.bottom(), a) && lat.leq(a, lat.top()));
            for b in 0..lat.len() {
                let m = lat.meet(a, b);
                let ra = &lat.faces[a].ray_indices;
                let rb = &lat.faces[b].ray_indices;
                let common: Vec<usize> = ra.iter().copied().filter(|r| rb.contains(r)).collect();
                prop_assert_eq!(&lat.faces[m].ray_indices, &common);
            }
            let f = &lat.faces[a];
            for (i, r) in c.extreme_rays().iter().enumerate() {
                let v = f.supporting_normal.dot(r);
                if f.ray_indices.contains(&i) {
                    prop_assert_eq!(v, rat(0, 1));
                } else {
                    prop_assert!(v > rat(0, 1));
                }
            }
            let span: Vec<QVector> = f.ray_indices.iter().map(|&i| c.extreme_rays()[i].clone()).collect();
            prop_assert_eq!(rank_of(&span), f.dim);
        }
    }

    #[test]
    fn triangulations_verify(g in gens()) {
        let c = cone_from_generators(&qs(&g)).unwrap();
        let t = triangulate(&c, &qs(&g)).unwrap();
        verify_triangulation(&c, &t).unwrap();
    }

    #[test]
    fn interior_simplices_verify(a in 1i64..6, b in 1i64..6, c3 in 1i64..6, p in 1i64..9, q in 1i64..9) {
        let cone = cone_from_generators(&qs(&[vec![a, 0, 1], vec![0, b, 1], vec![0, 0, 1], vec![c3, c3, 1]])).unwrap();
        let x = QVector::from_ints(&[p, q, p + q]);
        prop_assume!(cone.contains_relative_interior(&x));
        let s = interior_simplex(&cone, &x).unwrap();
        prop_assert!(verify_interior_simplex(&cone, &x, &s));
    }
}

#[test]
fn simplicial_cones_have_power_of_two_faces() {
    for k in 1..=4 {
        let c = simplicial(k);
        assert!(c.is_simplicial());
        let lat = face_lattice(&c).unwrap();
        assert_eq!(lat.len(), 1 << k, "k = {k}");
        for d in 0..=k {
            let binom = (0..d).fold(1usize, |acc, i| acc * (k - i) / (i + 1));
            assert_eq!(lat.of_dim(d).count(), binom);
        }
    }
}

#[test]
fn square_pyramid_lattice() {
    let c = cone_from_generators(&qs(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]])).unwrap();
    assert!(!c.is_simplicial());
    // 0, four rays, four 2-faces, the cone
    assert_eq!(face_lattice(&c).unwrap().len(), 10);
}

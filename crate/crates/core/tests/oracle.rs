//! Independent brute-force hull and randomized invariants.

use proptest::prelude::*;

mod common;

use common::*;

#[test]
fn oracle_on_known_shapes() {
    let cube: Vec<Row> = (0..8).map(|m| vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]).collect();
    assert_eq!(brute_force_facets(&cube).len(), 6);
    let tri: Vec<Row> = vec![vec![0, 0], vec![3, 0], vec![0, 3], vec![1, 1]];
    let f = brute_force_facets(&tri);
    assert!(f.contains(&(vec![1, 1], 3)));
    assert_eq!(f.len(), 3);
    assert_eq!(det(vec![vec![2, 1], vec![1, 3]]), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hull_matches_brute_force(points in point_set(2..=4, 10)) {
        check_hull(&points)?;
        check_face_ranks(&points)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn suspension_never_shortens_dual_distances(points in point_set(2..=3, 8)) {
        check_suspension(&points)?;
    }

    #[test]
    fn polar_is_an_involution(points in point_set(2..=4, 9)) {
        check_polar(&points)?;
    }

    #[test]
    fn pushed_facets_map_simplicially(points in point_set(2..=3, 8), seed in any::<u64>()) {
        check_push(&points, seed)?;
    }

    #[test]
    fn products_add(a in point_set(1..=2, 6), b in point_set(1..=2, 6)) {
        check_product(&a, &b)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn low_dimensional_prismatoids_have_the_dstep_property((d, top, bottom) in prismatoid_case()) {
        check_prismatoid(d, &top, &bottom)?;
    }
}

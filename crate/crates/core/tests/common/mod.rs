//! Brute-force hull oracle and random point sets shared by the test targets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hirsch_core::{Point, Polytope, Scalar, VPolytope};
use proptest::prelude::*;

pub type Row = Vec<i128>;

pub fn det(mut m: Vec<Row>) -> i128 {
    // Bareiss elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn rank(rows: &[Row]) -> usize {
    let mut a: Vec<Row> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                let pivot = a[r].clone();
                for (v, p) in a[i].iter_mut().zip(&pivot) {
                    *v = *v * x - p * y;
                }
                let g = a[i].iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    a[i].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// Every hyperplane through `d` of the points with all points weakly on one
/// side, as a primitive `(normal, offset)`.
pub fn brute_force_facets(points: &[Row]) -> BTreeSet<(Row, i128)> {
    let d = points[0].len();
    let mut out = BTreeSet::new();
    let n = points.len();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let p0 = &points[idx[0]];
        let diffs: Vec<Row> = idx[1..].iter().map(|&i| (0..d).map(|k| points[i][k] - p0[k]).collect()).collect();
        let normal: Row = (0..d)
            .map(|k| {
                let minor: Vec<Row> = diffs
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect())
                    .collect();
                if k % 2 == 0 {
                    det(minor)
                } else {
                    -det(minor)
                }
            })
            .collect();
        if normal.iter().any(|&x| x != 0) {
            let dot = |p: &Row| p.iter().zip(&normal).map(|(a, b)| a * b).sum::<i128>();
            let b = dot(p0);
            let vals: Vec<i128> = points.iter().map(dot).collect();
            let sign = if vals.iter().all(|&v| v <= b) {
                1
            } else if vals.iter().all(|&v| v >= b) {
                -1
            } else {
                0
            };
            if sign != 0 {
                let g = normal.iter().fold(b.abs(), |g, &x| gcd(g, x));
                let g = if g == 0 { 1 } else { g };
                out.insert((normal.iter().map(|x| sign * x / g).collect(), sign * b / g));
            }
        }
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - d + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
        if idx[d - 1] >= n {
            return out;
        }
    }
}

pub fn to_i128(s: &Scalar) -> i128 {
    assert!(s.is_integer());
    s.to_string().parse().unwrap()
}

pub fn full_dimensional(points: &[Row]) -> bool {
    let d = points[0].len();
    let diffs: Vec<Row> = points[1..].iter().map(|p| (0..d).map(|k| p[k] - points[0][k]).collect()).collect();
    rank(&diffs) == d
}

pub fn vpoly(points: &[Row]) -> VPolytope {
    VPolytope::new(points.iter().map(|r| Point::from_ints(&r.iter().map(|&x| x as i64).collect::<Vec<_>>())).collect())
        .unwrap()
}

pub fn point_set(dims: std::ops::RangeInclusive<usize>, max_points: usize) -> impl Strategy<Value = Vec<Row>> {
    dims.prop_flat_map(move |d| {
        prop::collection::btree_set(prop::collection::vec(-4i128..=4, d), d + 1..=max_points)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>())
    })
    .prop_filter("full-dimensional", |p| full_dimensional(p))
}

pub fn hull(points: &[Row]) -> Polytope {
    Polytope::convex_hull(vpoly(points).vertices().to_vec()).unwrap()
}

use hirsch_core::constructions::ops::{one_point_suspension, ops_distances, ops_facet_lifts, verify_ops};
use hirsch_core::constructions::product::product;
use hirsch_core::constructions::push::{push_facet_map, push_map_is_simplicial, push_vertex};
use hirsch_core::fans::pair_dstep_property;
use hirsch_core::{facet_enumeration, Prismatoid};

pub fn check_hull(points: &[Row]) -> Result<(), TestCaseError> {
    let (h, inc) = facet_enumeration(&vpoly(points)).unwrap();
    let got: BTreeSet<(Row, i128)> =
        h.inequalities.iter().map(|q| (q.coeffs().iter().map(to_i128).collect(), to_i128(q.offset()))).collect();
    prop_assert_eq!(got, brute_force_facets(points));
    for (f, q) in h.inequalities.iter().enumerate() {
        let normal: Row = q.coeffs().iter().map(to_i128).collect();
        for (v, p) in points.iter().enumerate() {
            let val: i128 = p.iter().zip(&normal).map(|(a, b)| a * b).sum();
            prop_assert_eq!(inc.contains(f, v), val == to_i128(q.offset()));
        }
    }
    Ok(())
}

/// Facet and ridge ranks, and connectivity of both graphs.
pub fn check_face_ranks(points: &[Row]) -> Result<(), TestCaseError> {
    let p = hull(points);
    let d = p.dim() as i64;
    for f in 0..p.n_facets() {
        prop_assert_eq!(p.affine_rank_of(p.facet_vertices(f)), d - 1);
    }
    let dual = p.dual_graph();
    for (f, g) in dual.edges() {
        prop_assert_eq!(p.affine_rank_of(&p.facet_vertices(f).intersection(p.facet_vertices(g))), d - 2);
    }
    prop_assert!(dual.is_connected());
    prop_assert!(p.vertex_graph().is_connected());
    Ok(())
}

pub fn check_suspension(points: &[Row]) -> Result<(), TestCaseError> {
    let q = hull(points);
    let qd = q.dual_graph();
    for v in 0..q.n_vertices() {
        let s = Polytope::new(one_point_suspension(&q, v).unwrap()).unwrap();
        prop_assert!(verify_ops(&q, v, &s));
        let lifts = ops_facet_lifts(&q, v, &s).unwrap();
        let sd = s.dual_graph();
        for f1 in 0..q.n_facets() {
            for f2 in 0..q.n_facets() {
                let (orig, lifted) = ops_distances(&qd, &lifts, &sd, f1, f2).unwrap();
                prop_assert!(lifted >= orig, "v={} f1={} f2={}: {} < {}", v, f1, f2, lifted, orig);
            }
        }
    }
    Ok(())
}

pub fn check_polar(points: &[Row]) -> Result<(), TestCaseError> {
    let p = hull(points);
    let c = p.vpolytope().centroid();
    let polar = Polytope::new(p.polar().unwrap()).unwrap();
    prop_assert_eq!(polar.n_vertices(), p.n_facets());
    for f in 0..p.n_facets() {
        prop_assert_eq!(polar.vertex_facets(f).to_vec(), p.facet_vertices(f).to_vec());
    }
    let back = polar.polar_about(&Point::origin(p.ambient_dim())).unwrap();
    let a: BTreeSet<Point> = back.vertices().iter().cloned().collect();
    let b: BTreeSet<Point> = p.vertices().iter().map(|v| v.sub(&c)).collect();
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn check_push(points: &[Row], seed: u64) -> Result<(), TestCaseError> {
    let q = hull(points);
    let all = q.vertex_set(0..q.n_vertices());
    for v in 0..q.n_vertices() {
        let p = push_vertex(&q, v, &all, seed).unwrap();
        let map = push_facet_map(&q, &p).unwrap();
        prop_assert!(push_map_is_simplicial(&q, &p, &map));
    }
    Ok(())
}

pub fn check_product(a: &[Row], b: &[Row]) -> Result<(), TestCaseError> {
    let (pa, pb) = (hull(a), hull(b));
    let prod = Polytope::new(product(pa.vpolytope(), pb.vpolytope())).unwrap();
    prop_assert_eq!(prod.dim(), pa.dim() + pb.dim());
    prop_assert_eq!(prod.n_facets(), pa.n_facets() + pb.n_facets());
    let diam = |p: &Polytope| p.vertex_graph().diameter().unwrap();
    prop_assert_eq!(diam(&prod), diam(&pa) + diam(&pb));
    Ok(())
}

/// Random prismatoid with bases at last coordinate `1` and `-1`.
pub fn prismatoid_case() -> impl Strategy<Value = (usize, Vec<Row>, Vec<Row>)> {
    (3usize..=4).prop_flat_map(|d| (Just(d), point_set(d - 1..=d - 1, d + 3), point_set(d - 1..=d - 1, d + 3)))
}

pub fn check_prismatoid(d: usize, top: &[Row], bottom: &[Row]) -> Result<(), TestCaseError> {
    let lift = |pts: &[Row], h: i64| -> Vec<Point> {
        hull(pts).vertices().iter().map(|p| p.extended(Scalar::from_int(h))).collect()
    };
    let mut all = lift(top, 1);
    all.extend(lift(bottom, -1));
    let p = Polytope::from_points(all).unwrap();
    let last = |sign: i64| {
        let mut c = vec![0i64; d];
        c[d - 1] = sign;
        hirsch_core::Inequality::from_ints(&c, 1).unwrap()
    };
    let (fp, fm) = (p.facet_index(&last(1)).unwrap(), p.facet_index(&last(-1)).unwrap());
    let q = Prismatoid::new(p, fp, fm).unwrap();
    let pair = pair_dstep_property(&hull(top), &hull(bottom), d).unwrap();
    let w = q.width();
    prop_assert!(w <= d);
    prop_assert_eq!(pair.holds, w <= d);
    prop_assert_eq!(pair.min_length + 1, w);
    Ok(())
}

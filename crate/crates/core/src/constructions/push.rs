//! Pushing a vertex slightly into a face of the polytope.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::polytope::Polytope;
use crate::scalar::Scalar;

pub const DEFAULT_MAX_HALVINGS: u32 = 64;

/// A random point in the relative interior of the face with vertex set
/// `face`: a combination with positive integer weights.
pub fn random_relative_interior(q: &Polytope, face: &BitSet, rng: &mut ChaCha8Rng) -> Result<Point> {
    if face.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sum = Point::origin(q.ambient_dim());
    let mut total = 0i64;
    for v in face.iter() {
        let k: i64 = rng.gen_range(1..=16);
        sum = sum.add(&q.vertex(v).scale(&Scalar::from_int(k)));
        total += k;
    }
    Ok(sum.scale(&Scalar::ratio(1, total)))
}

/// For each facet of the pushed polytope, the unique facet of the original
/// containing its vertex set (with `v'` read as `v`); `None` if some facet
/// has no such facet or several.
pub fn push_facet_map(q: &Polytope, pushed: &Polytope) -> Option<Vec<usize>> {
    (0..pushed.n_facets())
        .map(|f| {
            // vertex indices are shared, so the pushed vertex keeps v's index
            let s = pushed.facet_vertices(f);
            let mut hits = (0..q.n_facets()).filter(|&g| s.is_subset(q.facet_vertices(g)));
            match (hits.next(), hits.next()) {
                (Some(g), None) => Some(g),
                _ => None,
            }
        })
        .collect()
}

/// Adjacent facets of the pushed polytope go to equal or adjacent facets.
pub fn push_map_is_simplicial(q: &Polytope, pushed: &Polytope, map: &[usize]) -> bool {
    let qd = q.dual_graph();
    pushed.dual_graph().edges().all(|(a, b)| map[a] == map[b] || qd.has_edge(map[a], map[b]))
}

/// Replaces vertex `v` by a point `v' = v + t (c - v)` with `c` random in
/// the relative interior of `target`, halving `t` from 1 until the result
/// keeps every point as a vertex, satisfies the facet-merge property, and
/// passes `accept`. Vertex order and labels are kept.
pub fn push_vertex_with(
    q: &Polytope,
    v: usize,
    target: &BitSet,
    seed: u64,
    max_halvings: u32,
    accept: impl Fn(&Polytope) -> bool,
) -> Result<Polytope> {
    if v >= q.n_vertices() {
        return Err(Error::IndexOutOfRange { index: v, len: q.n_vertices() });
    }
    if !q.is_face(target) || !target.contains(v) {
        return Err(Error::Precondition("target must be a face containing the vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = random_relative_interior(q, target, &mut rng)?;
    let dir = c.sub(q.vertex(v));
    let mut t = Scalar::one();
    for _ in 0..=max_halvings {
        let moved = q.vertex(v).add(&dir.scale(&t));
        let vp = q.vpolytope();
        let candidate = vp.map_points(|p| if p == q.vertex(v) { moved.clone() } else { p.clone() });
        if let Ok(Ok(p)) = candidate.map(Polytope::new) {
            if push_facet_map(q, &p).is_some() && accept(&p) {
                return Ok(p);
            }
        }
        t = t * Scalar::ratio(1, 2);
    }
    Err(Error::Exhausted(format!("push of vertex {v} failed after {max_halvings} halvings")))
}

pub fn push_vertex(q: &Polytope, v: usize, target: &BitSet, seed: u64) -> Result<Polytope> {
    push_vertex_with(q, v, target, seed, DEFAULT_MAX_HALVINGS, |_| true)
}

/// Every facet through `v` other than those listed is a simplex.
pub fn simplicial_at(p: &Polytope, v: usize, except: &[usize]) -> bool {
    p.vertex_facets(v).iter().filter(|f| !except.contains(f)).all(|f| p.facet_vertices(f).count() == p.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::VPolytope;

    fn poly(rows: &[&[i64]]) -> Polytope {
        Polytope::new(VPolytope::from_int_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn pushing_a_simplex_vertex_keeps_a_simplex() {
        let s = poly(&[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        let all = BitSet::full(4);
        for seed in 0..4 {
            let p = push_vertex(&s, 0, &all, seed).unwrap();
            assert!(p.is_simplex());
            assert_ne!(p.vertex(0), s.vertex(0));
        }
    }

    #[test]
    fn push_to_itself_is_identity() {
        let s = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let p = push_vertex(&s, 1, &s.vertex_set([1]), 3).unwrap();
        assert_eq!(p.vertices(), s.vertices());
    }

    #[test]
    fn pushing_a_cube_vertex_inside_splits_its_facets() {
        let mut rows = Vec::new();
        for m in 0..8i64 {
            rows.push([m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        let c = poly(&rows);
        let p =
            push_vertex_with(&c, 0, &BitSet::full(8), 1, DEFAULT_MAX_HALVINGS, |p| simplicial_at(p, 0, &[])).unwrap();
        assert!(simplicial_at(&p, 0, &[]));
        let map = push_facet_map(&c, &p).unwrap();
        assert!(push_map_is_simplicial(&c, &p, &map));
        assert_eq!(p.n_facets(), 9);
    }
}

//! One-point suspension.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::polytope::{Polytope, VPolytope};
use crate::scalar::Scalar;

/// `S_v(Q)`: `Q` is embedded at last coordinate 0, vertex `v` is replaced
/// (in place) by `u = (v, 1)`, and `w = (v, -1)` is appended.
pub fn one_point_suspension(q: &Polytope, v: usize) -> Result<VPolytope> {
    let n = q.n_vertices();
    if v >= n {
        return Err(Error::IndexOutOfRange { index: v, len: n });
    }
    let mut pts: Vec<_> = q.vertices().iter().map(|p| p.extended(Scalar::zero())).collect();
    pts[v] = q.vertex(v).extended(Scalar::one());
    pts.push(q.vertex(v).extended(-Scalar::one()));
    let out = VPolytope::new(pts)?;
    match q.vpolytope().labels() {
        Some(labels) => {
            let mut l = labels.to_vec();
            l[v] = format!("{}u", labels[v]);
            l.push(format!("{}w", labels[v]));
            out.with_labels(l)
        }
        None => Ok(out),
    }
}

/// Index of `u` and `w` in the suspension built by [`one_point_suspension`].
pub fn apex_indices(q: &Polytope, v: usize) -> (usize, usize) {
    (v, q.n_vertices())
}

/// Facet vertex sets of `S_v(Q)` predicted from those of `Q`: `S_v(F)` for
/// `F ∋ v`, and `F * u`, `F * w` otherwise.
pub fn expected_ops_facets(q: &Polytope, v: usize) -> BTreeSet<Vec<usize>> {
    let (u, w) = apex_indices(q, v);
    let mut out = BTreeSet::new();
    for f in 0..q.n_facets() {
        let verts = q.facet_vertices(f).to_vec();
        if verts.contains(&v) {
            let mut s: Vec<usize> = verts.clone();
            s.push(w);
            s.sort_unstable();
            out.insert(s);
        } else {
            for apex in [u, w] {
                let mut s = verts.clone();
                s.push(apex);
                s.sort_unstable();
                out.insert(s);
            }
        }
    }
    out
}

/// Whether the enumerated facets of `s = S_v(Q)` are exactly the predicted
/// ones.
pub fn verify_ops(q: &Polytope, v: usize, s: &Polytope) -> bool {
    let got: BTreeSet<Vec<usize>> = (0..s.n_facets()).map(|f| s.facet_vertices(f).to_vec()).collect();
    s.dim() == q.dim() + 1 && s.n_vertices() == q.n_vertices() + 1 && got == expected_ops_facets(q, v)
}

/// Facets of `S_v(Q)` lying over each facet of `Q`: one (`S_v(F)`) or two
/// (`F * u`, `F * w`).
pub fn ops_facet_lifts(q: &Polytope, v: usize, s: &Polytope) -> Result<Vec<Vec<usize>>> {
    let (u, w) = apex_indices(q, v);
    let n = s.n_vertices();
    (0..q.n_facets())
        .map(|f| {
            let verts = q.facet_vertices(f);
            let candidates: Vec<BitSet> = if verts.contains(v) {
                let mut b = BitSet::from_indices(n, verts.iter());
                b.insert(w);
                alloc::vec![b]
            } else {
                [u, w]
                    .iter()
                    .map(|&apex| {
                        let mut b = BitSet::from_indices(n, verts.iter());
                        b.insert(apex);
                        b
                    })
                    .collect()
            };
            candidates
                .iter()
                .map(|b| {
                    s.facet_with_vertices(b)
                        .ok_or_else(|| Error::Verification(format!("lift of facet {f} is not a facet")))
                })
                .collect()
        })
        .collect()
}

/// Lifted distance against original distance, minimized over every choice
/// of lifts.
pub fn ops_distances(
    q_dual: &DualGraph,
    lifts: &[Vec<usize>],
    s_dual: &DualGraph,
    f1: usize,
    f2: usize,
) -> Result<(usize, usize)> {
    let original = q_dual.distance(f1, f2)?;
    let mut lifted = usize::MAX;
    for &a in &lifts[f1] {
        let dist = s_dual.bfs(a);
        for &b in &lifts[f2] {
            lifted = lifted.min(dist[b].ok_or(Error::Disconnected)?);
        }
    }
    Ok((original, lifted))
}

/// Dual distance never shrinks under one-point suspension, whichever lifts
/// are chosen.
pub fn ops_distance_check(q: &Polytope, v: usize, f1: usize, f2: usize) -> Result<bool> {
    let s = Polytope::new(one_point_suspension(q, v)?)?;
    let lifts = ops_facet_lifts(q, v, &s)?;
    let (original, lifted) = ops_distances(&q.dual_graph(), &lifts, &s.dual_graph(), f1, f2)?;
    Ok(lifted >= original)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::VPolytope;

    fn pentagon() -> Polytope {
        Polytope::new(VPolytope::from_int_rows(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2]]).unwrap()).unwrap()
    }

    #[test]
    fn suspension_of_pentagon() {
        let q = pentagon();
        for v in 0..5 {
            let s = Polytope::new(one_point_suspension(&q, v).unwrap()).unwrap();
            assert_eq!((s.dim(), s.n_vertices(), s.n_facets()), (3, 6, 8));
            assert!(s.is_simplicial());
            assert!(verify_ops(&q, v, &s));
        }
    }

    #[test]
    fn suspension_of_segment_and_square() {
        let seg = Polytope::new(VPolytope::from_int_rows(&[&[0], &[1]]).unwrap()).unwrap();
        let t = Polytope::new(one_point_suspension(&seg, 0).unwrap()).unwrap();
        assert_eq!((t.dim(), t.n_vertices(), t.n_facets()), (2, 3, 3));
        let sq = Polytope::new(VPolytope::from_int_rows(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()).unwrap();
        let s = Polytope::new(one_point_suspension(&sq, 0).unwrap()).unwrap();
        assert_eq!((s.n_vertices(), s.n_facets()), (5, 6));
        assert!(s.is_simplicial());
        assert!(verify_ops(&sq, 0, &s));
    }

    #[test]
    fn pentagon_distances_do_not_shrink() {
        let q = pentagon();
        let dual = q.dual_graph();
        for v in 0..5 {
            for f1 in 0..5 {
                for f2 in 0..5 {
                    assert!(ops_distance_check(&q, v, f1, f2).unwrap());
                }
            }
        }
        assert_eq!(dual.diameter().unwrap(), 2);
    }
}

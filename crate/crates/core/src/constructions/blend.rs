//! Blending two simple polytopes at a vertex each, at the level of graphs.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polytope::Polytope;

/// Vertex graph and facet count of the blend.
#[derive(Debug, Clone)]
pub struct BlendGraph {
    pub graph: Graph,
    pub facet_count: usize,
    pub dim: usize,
}

impl BlendGraph {
    pub fn diameter(&self) -> Result<usize> {
        self.graph.diameter()
    }
}

/// For each neighbor of the simple vertex `v`, the position (within the
/// sorted facets at `v`) of the one facet it does not lie on.
fn left_facets(p: &Polytope, v: usize) -> Result<Vec<(usize, usize)>> {
    let at_v = p.vertex_facets(v).to_vec();
    let g = p.vertex_graph();
    g.neighbors(v)
        .iter()
        .map(|&u| {
            let missing: Vec<usize> = (0..at_v.len()).filter(|&i| !p.facet_vertices(at_v[i]).contains(u)).collect();
            match missing.as_slice() {
                [i] => Ok((u, *i)),
                _ => Err(Error::Precondition(format!("edge {v}-{u} is not simple"))),
            }
        })
        .collect()
}

/// Glues `(G1 - v1)` and `(G2 - v2)` by joining the neighbor of `v1` that
/// leaves the `i`-th facet at `v1` to the neighbor of `v2` that leaves the
/// `matching[i]`-th facet at `v2` (facets at a vertex in index order).
pub fn blend_graph(p1: &Polytope, v1: usize, p2: &Polytope, v2: usize, matching: &[usize]) -> Result<BlendGraph> {
    let d = p1.dim();
    if p2.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: p2.dim() });
    }
    if !p1.is_simple() || !p2.is_simple() {
        return Err(Error::Precondition("blending needs simple polytopes".into()));
    }
    for (p, v) in [(p1, v1), (p2, v2)] {
        if v >= p.n_vertices() {
            return Err(Error::IndexOutOfRange { index: v, len: p.n_vertices() });
        }
    }
    let mut seen = alloc::vec![false; d];
    if matching.len() != d || !matching.iter().all(|&j| j < d && !core::mem::replace(&mut seen[j], true)) {
        return Err(Error::Precondition("facet matching must be a bijection".into()));
    }
    let n1 = p1.n_vertices();
    let map1 = |x: usize| if x < v1 { x } else { x - 1 };
    let map2 = |x: usize| n1 - 1 + if x < v2 { x } else { x - 1 };
    let mut graph = Graph::new(n1 + p2.n_vertices() - 2);
    for (a, b) in p1.vertex_graph().edges() {
        if a != v1 && b != v1 {
            graph.add_edge(map1(a), map1(b));
        }
    }
    for (a, b) in p2.vertex_graph().edges() {
        if a != v2 && b != v2 {
            graph.add_edge(map2(a), map2(b));
        }
    }
    let left1 = left_facets(p1, v1)?;
    let left2 = left_facets(p2, v2)?;
    for (u, i) in left1 {
        let (w, _) = *left2
            .iter()
            .find(|&&(_, j)| j == matching[i])
            .ok_or_else(|| Error::Precondition("matched facet has no leaving edge".into()))?;
        graph.add_edge(map1(u), map2(w));
    }
    graph.finish();
    Ok(BlendGraph { graph, facet_count: p1.n_facets() + p2.n_facets() - d, dim: d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::VPolytope;

    fn cube() -> Polytope {
        let mut rows = Vec::new();
        for m in 0..8i64 {
            rows.push([m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let rows: Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        Polytope::new(VPolytope::from_int_rows(&rows).unwrap()).unwrap()
    }

    #[test]
    fn two_cubes() {
        let c = cube();
        let b = blend_graph(&c, 0, &c, 7, &[0, 1, 2]).unwrap();
        assert_eq!(b.facet_count, 9);
        assert_eq!(b.graph.node_count(), 14);
        assert!(b.diameter().unwrap() >= 5);
        assert!((0..14).all(|v| b.graph.degree(v) == 3));
    }

    #[test]
    fn two_simplices() {
        let t = Polytope::new(VPolytope::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap())
            .unwrap();
        let b = blend_graph(&t, 0, &t, 0, &[2, 0, 1]).unwrap();
        assert_eq!(b.graph.node_count(), 6);
        assert_eq!(b.facet_count, 5);
        let c = cube();
        assert_eq!(blend_graph(&c, 0, &t, 0, &[0, 1, 2]).unwrap().facet_count, 7);
    }

    #[test]
    fn rejects_bad_input() {
        let c = cube();
        assert!(blend_graph(&c, 0, &c, 0, &[0, 0, 1]).is_err());
        let oct = Polytope::new(
            VPolytope::from_int_rows(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
                .unwrap(),
        )
        .unwrap();
        assert!(blend_graph(&oct, 0, &c, 0, &[0, 1, 2]).is_err());
    }
}

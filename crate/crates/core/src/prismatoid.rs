//! Prismatoids: polytopes with two parallel facets covering every vertex.

use alloc::format;
use alloc::string::ToString;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::Inequality;
use crate::graph::DualGraph;
use crate::polytope::Polytope;
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Prismatoid {
    polytope: Polytope,
    base_plus: usize,
    base_minus: usize,
}

fn opposite(a: &Inequality, b: &Inequality) -> bool {
    // canonical forms are primitive, so parallel opposite normals are exact negatives
    a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| *x == -y)
}

impl Prismatoid {
    /// Checks that the two facets are parallel, disjoint and together
    /// contain every vertex.
    pub fn new(polytope: Polytope, base_plus: usize, base_minus: usize) -> Result<Self> {
        let m = polytope.n_facets();
        for f in [base_plus, base_minus] {
            if f >= m {
                return Err(Error::IndexOutOfRange { index: f, len: m });
            }
        }
        if !polytope.is_full_dimensional() {
            return Err(Error::Precondition("prismatoid must be full-dimensional".to_string()));
        }
        if !opposite(polytope.facet(base_plus), polytope.facet(base_minus)) {
            return Err(Error::Precondition(format!("facets {base_plus} and {base_minus} are not parallel")));
        }
        let plus = polytope.facet_vertices(base_plus);
        let minus = polytope.facet_vertices(base_minus);
        if !plus.intersection(minus).is_empty() {
            return Err(Error::Precondition("base facets intersect".to_string()));
        }
        if plus.union(minus).count() != polytope.n_vertices() {
            return Err(Error::Precondition("base facets do not cover every vertex".to_string()));
        }
        Ok(Prismatoid { polytope, base_plus, base_minus })
    }

    /// Uses the first pair of opposite facets (in facet order) that covers
    /// every vertex.
    pub fn detect(polytope: Polytope) -> Result<Self> {
        let m = polytope.n_facets();
        let n = polytope.n_vertices();
        for a in 0..m {
            for b in 0..m {
                if a == b || !opposite(polytope.facet(a), polytope.facet(b)) {
                    continue;
                }
                let cover = polytope.facet_vertices(a).union(polytope.facet_vertices(b));
                if cover.count() == n {
                    return Prismatoid::new(polytope, a, b);
                }
            }
        }
        Err(Error::Precondition("no pair of parallel facets covers all vertices".to_string()))
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn into_polytope(self) -> Polytope {
        self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn base_plus(&self) -> usize {
        self.base_plus
    }

    pub fn base_minus(&self) -> usize {
        self.base_minus
    }

    pub fn plus_vertices(&self) -> &BitSet {
        self.polytope.facet_vertices(self.base_plus)
    }

    pub fn minus_vertices(&self) -> &BitSet {
        self.polytope.facet_vertices(self.base_minus)
    }

    /// The same prismatoid with the roles of the bases exchanged.
    pub fn swapped(&self) -> Prismatoid {
        Prismatoid { polytope: self.polytope.clone(), base_plus: self.base_minus, base_minus: self.base_plus }
    }

    /// `n - 2d`: how far the bases are from being simplices.
    pub fn asimpliciality(&self) -> usize {
        self.polytope.n_vertices() - 2 * self.dim()
    }

    /// Height function `h(x) = a · x` of the plus base's outer normal; the
    /// plus base sits at its maximum.
    pub fn heights(&self) -> (Scalar, Scalar) {
        let h = self.polytope.facet(self.base_plus);
        let v = self.minus_vertices().iter().next().expect("nonempty base");
        let low = crate::linalg::dot(h.coeffs(), self.polytope.vertex(v).coords());
        (h.offset().clone(), low)
    }

    /// Dual-graph distance between the two bases.
    pub fn width(&self) -> usize {
        self.width_in(&self.polytope.dual_graph())
    }

    pub fn width_in(&self, dual: &DualGraph) -> usize {
        dual.distance(self.base_plus, self.base_minus).expect("dual graph of a polytope is connected")
    }

    /// `(dim F ∩ Q⁺, dim F ∩ Q⁻)` for facet `f`, with -1 for an empty
    /// intersection.
    pub fn bidimension(&self, f: usize) -> (i64, i64) {
        let verts = self.polytope.facet_vertices(f);
        (
            self.polytope.affine_rank_of(&verts.intersection(self.plus_vertices())),
            self.polytope.affine_rank_of(&verts.intersection(self.minus_vertices())),
        )
    }

    /// Width does not exceed dimension.
    pub fn has_dstep_property(&self) -> bool {
        self.width() <= self.dim()
    }
}

/// Two vertices such that every facet contains exactly one of them, with
/// their vertex-graph distance. The first such pair in index order.
pub fn is_spindle(p: &Polytope) -> Option<(usize, usize, usize)> {
    let n = p.n_vertices();
    for u in 0..n {
        let at_u = p.vertex_facets(u);
        let mut candidates = BitSet::full(n);
        for f in 0..p.n_facets() {
            if at_u.contains(f) {
                candidates = candidates.difference(p.facet_vertices(f));
            } else {
                candidates.intersect_with(p.facet_vertices(f));
            }
        }
        let found = candidates.iter().find(|&v| v > u);
        if let Some(v) = found {
            let length = p.vertex_graph().distance(u, v).ok()?;
            return Some((u, v, length));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::VPolytope;

    fn cube() -> Polytope {
        let mut rows = alloc::vec::Vec::new();
        for m in 0..8i64 {
            rows.push([m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let rows: alloc::vec::Vec<&[i64]> = rows.iter().map(|r| &r[..]).collect();
        Polytope::new(VPolytope::from_int_rows(&rows).unwrap()).unwrap()
    }

    #[test]
    fn cube_over_opposite_facets() {
        let p = Prismatoid::detect(cube()).unwrap();
        assert_eq!(p.width(), 2);
        assert!(p.has_dstep_property());
        assert_eq!(p.asimpliciality(), 2);
    }

    #[test]
    fn triangular_prism_width() {
        let q = Polytope::new(
            VPolytope::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 1], &[0, 1, 1]])
                .unwrap(),
        )
        .unwrap();
        let p = Prismatoid::detect(q).unwrap();
        assert_eq!(p.width(), 2);
        assert_eq!(p.asimpliciality(), 0);
    }

    #[test]
    fn cube_is_a_spindle_of_length_three() {
        let (u, v, len) = is_spindle(&cube()).unwrap();
        assert_eq!((u, v, len), (0, 7, 3));
        let tri = Polytope::new(VPolytope::from_int_rows(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap()).unwrap();
        assert!(is_spindle(&tri).is_none());
    }

    #[test]
    fn bidimensions_of_a_prism() {
        let p = Prismatoid::detect(cube()).unwrap();
        for f in 0..6 {
            let b = p.bidimension(f);
            if f == p.base_plus() {
                assert_eq!(b, (2, -1));
            } else if f == p.base_minus() {
                assert_eq!(b, (-1, 2));
            } else {
                assert_eq!(b, (1, 1));
            }
        }
    }

    #[test]
    fn rejects_adjacent_facets() {
        let c = cube();
        let dual = c.dual_graph();
        let b = dual.neighbors(0)[0];
        assert!(Prismatoid::new(c, 0, b).is_err());
    }
}

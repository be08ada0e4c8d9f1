//! Cartesian products of polytopes.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::polytope::VPolytope;

/// All coordinate concatenations `(p, q)`, `p` varying slowest.
pub fn product(a: &VPolytope, b: &VPolytope) -> VPolytope {
    let mut pts = Vec::with_capacity(a.len() * b.len());
    for p in a.vertices() {
        for q in b.vertices() {
            let mut c = p.coords().to_vec();
            c.extend_from_slice(q.coords());
            pts.push(Point::new(c));
        }
    }
    VPolytope::new(pts).expect("nonempty factors")
}

/// The `k`-fold product of `p` with itself.
pub fn power(p: &VPolytope, k: usize) -> Result<VPolytope> {
    if k == 0 {
        return Err(Error::Precondition("power needs k >= 1".into()));
    }
    let mut out = p.clone();
    for _ in 1..k {
        out = product(&out, p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Polytope;

    #[test]
    fn segment_cubed_is_the_cube() {
        let seg = VPolytope::from_int_rows(&[&[0], &[1]]).unwrap();
        let c = Polytope::new(power(&seg, 3).unwrap()).unwrap();
        assert_eq!((c.dim(), c.n_vertices(), c.n_facets()), (3, 8, 6));
        assert_eq!(c.vertex_graph().diameter().unwrap(), 3);
    }

    #[test]
    fn product_of_pentagons() {
        let pent = VPolytope::from_int_rows(&[&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 2]]).unwrap();
        let p = Polytope::new(product(&pent, &pent)).unwrap();
        assert_eq!((p.dim(), p.n_vertices(), p.n_facets()), (4, 25, 10));
        assert!(p.is_simple());
        assert_eq!(p.vertex_graph().diameter().unwrap(), 4);
    }
}

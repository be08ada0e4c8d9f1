//! The strong d-step step: one dimension and one vertex more, width at
//! least one more.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ops::one_point_suspension;
use super::push::{push_vertex_with, simplicial_at, DEFAULT_MAX_HALVINGS};
use crate::error::{Error, Result};
use crate::geometry::{Inequality, Point};
use crate::polytope::{Polytope, VPolytope};
use crate::prismatoid::Prismatoid;
use crate::scalar::Scalar;

/// Choices made by one step, for reproducibility reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepChoice {
    /// Vertex of the minus base that was suspended.
    pub suspended: usize,
    /// Vertex of the non-simplex base that was moved.
    pub apex: usize,
    pub pushed: bool,
    pub epsilon: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub step: usize,
    pub dim: usize,
    pub vertices: usize,
    pub facets: usize,
    pub width: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "STEP {} dim={} vertices={} facets={} width={}",
            self.step, self.dim, self.vertices, self.facets, self.width
        )
    }
}

fn base_is_simplex(q: &Prismatoid, f: usize) -> bool {
    q.polytope().facet_vertices(f).count() == q.dim()
}

/// Pushes `a` toward the relative interior of the plus base until every
/// facet through it other than the plus base is a simplex.
fn make_apex_generic(q: &Prismatoid, a: usize, seed: u64) -> Result<(Prismatoid, bool)> {
    let p = q.polytope();
    if simplicial_at(p, a, &[q.base_plus()]) {
        return Ok((q.clone(), false));
    }
    let plus_ineq = p.facet(q.base_plus()).clone();
    let minus_ineq = p.facet(q.base_minus()).clone();
    let pushed =
        push_vertex_with(p, a, q.plus_vertices(), seed, DEFAULT_MAX_HALVINGS, |r| match r.facet_index(&plus_ineq) {
            Some(fp) => simplicial_at(r, a, &[fp]) && r.facet_index(&minus_ineq).is_some(),
            None => false,
        })?;
    let fp = pushed.facet_index(&plus_ineq).expect("checked by the acceptance predicate");
    let fm = pushed.facet_index(&minus_ineq).expect("checked by the acceptance predicate");
    Ok((Prismatoid::new(pushed, fp, fm)?, true))
}

fn lift_base(h: &Inequality) -> Inequality {
    let mut c = h.coeffs().to_vec();
    c.push(Scalar::zero());
    Inequality::new(c, h.offset().clone()).expect("nonzero normal")
}

/// One strong d-step: suspend a vertex of the minus base, make an apex of
/// the (non-simplex) plus base generic, and lift it off the old plus base by
/// `ε e_{d+1}`, halving `ε` from 1 until the result is a prismatoid of width
/// at least one more. Swaps the bases first if only the minus base is not a
/// simplex.
pub fn strong_dstep_step(q: &Prismatoid, seed: u64) -> Result<(Prismatoid, StepChoice)> {
    strong_dstep_step_with(q, seed, DEFAULT_MAX_HALVINGS)
}

pub fn strong_dstep_step_with(q: &Prismatoid, seed: u64, max_halvings: u32) -> Result<(Prismatoid, StepChoice)> {
    if q.asimpliciality() == 0 {
        return Err(Error::Precondition("both bases are simplices".to_string()));
    }
    let q = if base_is_simplex(q, q.base_plus()) { q.swapped() } else { q.clone() };
    let width = q.width();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let minus: Vec<usize> = q.minus_vertices().to_vec();
    let plus: Vec<usize> = q.plus_vertices().to_vec();
    let v = minus[rng.gen_range(0..minus.len())];
    let a = plus[rng.gen_range(0..plus.len())];
    let (q, pushed) = make_apex_generic(&q, a, rng.gen())?;

    let p = q.polytope();
    let s = one_point_suspension(p, v)?;
    let new_plus = lift_base(p.facet(q.base_plus()));
    let new_minus = lift_base(p.facet(q.base_minus()));
    let d = p.ambient_dim();
    let mut up = Point::origin(d + 1).into_coords();
    up[d] = Scalar::one();
    let up = Point::new(up);

    let mut eps = Scalar::one();
    for _ in 0..=max_halvings {
        let moved = s.vertices()[a].add(&up.scale(&eps));
        let mut pts = s.vertices().to_vec();
        pts[a] = moved;
        let mut candidate = VPolytope::new(pts)?;
        if let Some(l) = s.labels() {
            candidate = candidate.with_labels(l.to_vec())?;
        }
        if let Ok(r) = Polytope::new(candidate) {
            if let (Some(fp), Some(fm)) = (r.facet_index(&new_plus), r.facet_index(&new_minus)) {
                if let Ok(next) = Prismatoid::new(r, fp, fm) {
                    if next.width() > width {
                        return Ok((next, StepChoice { suspended: v, apex: a, pushed, epsilon: eps }));
                    }
                }
            }
        }
        eps = eps * Scalar::ratio(1, 2);
    }
    Err(Error::Exhausted(format!("no lift of apex {a} within {max_halvings} halvings")))
}

/// Applies [`strong_dstep_step`] `min(max_steps, asimpliciality)` times,
/// recording one trace entry per step (the input is step 0).
pub fn strong_dstep_iterate(q: &Prismatoid, max_steps: usize, seed: u64) -> Result<(Prismatoid, Vec<TraceEntry>)> {
    let entry = |i: usize, q: &Prismatoid| TraceEntry {
        step: i,
        dim: q.dim(),
        vertices: q.polytope().n_vertices(),
        facets: q.polytope().n_facets(),
        width: q.width(),
    };
    let mut cur = q.clone();
    let mut trace = alloc::vec![entry(0, &cur)];
    let steps = max_steps.min(cur.asimpliciality());
    for i in 1..=steps {
        let step_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64);
        cur = strong_dstep_step(&cur, step_seed)?.0;
        trace.push(entry(i, &cur));
    }
    Ok((cur, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism_over_square() -> Prismatoid {
        // square base on top of a triangle: 7 vertices in dimension 3
        let q = Polytope::new(
            VPolytope::from_int_rows(&[
                &[0, 0, 1],
                &[4, 0, 1],
                &[4, 4, 1],
                &[0, 4, 1],
                &[1, 1, 0],
                &[3, 1, 0],
                &[2, 3, 0],
            ])
            .unwrap(),
        )
        .unwrap();
        Prismatoid::detect(q).unwrap()
    }

    #[test]
    fn one_step_on_a_small_prismatoid() {
        let q = prism_over_square();
        assert_eq!(q.asimpliciality(), 1);
        let (r, _) = strong_dstep_step(&q, 5).unwrap();
        assert_eq!(r.dim(), 4);
        assert_eq!(r.polytope().n_vertices(), 8);
        assert!(r.width() > q.width());
        assert_eq!(r.asimpliciality(), 0);
        assert!(strong_dstep_step(&r, 0).is_err());
    }

    #[test]
    fn zero_steps_is_identity() {
        let q = prism_over_square();
        let (r, trace) = strong_dstep_iterate(&q, 0, 1).unwrap();
        assert_eq!(r.polytope().vertices(), q.polytope().vertices());
        assert_eq!(trace.len(), 1);
        assert_eq!(
            trace[0].to_string(),
            format!("STEP 0 dim=3 vertices=7 facets={} width={}", q.polytope().n_facets(), q.width())
        );
    }
}

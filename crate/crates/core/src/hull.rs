//! Double description on the homogenization of a full-dimensional point
//! set.
//!
//! Points `p_i` become generators `g_i = (s_i, s_i p_i)` of a pointed cone.
//! The valid inequalities `r_0 + r·x ≥ 0` form the dual cone
//! `{r : g_i · r ≥ 0}`, whose extreme rays are exactly the facets. Rays are
//! kept as primitive integer vectors and generators are inserted in input
//! order; two rays are combined only when they are adjacent, which is
//! decided combinatorially from their zero sets.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bitset::BitSet;
use crate::linalg::{int_dot, int_rank, primitive, row_reduce, sign, to_primitive_integers};
use crate::scalar::Scalar;

/// An extreme ray of the dual cone together with the generators it is
/// tight on.
#[derive(Debug, Clone)]
pub(crate) struct Ray {
    pub coords: Vec<BigInt>,
    pub zero_set: BitSet,
}

/// Picks the first `dim` linearly independent generators in input order.
fn initial_basis(gens: &[Vec<BigInt>], dim: usize) -> Option<Vec<usize>> {
    let mut chosen: Vec<usize> = Vec::with_capacity(dim);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for (i, g) in gens.iter().enumerate() {
        rows.push(g.clone());
        if int_rank(&rows) == rows.len() {
            chosen.push(i);
            if chosen.len() == dim {
                return Some(chosen);
            }
        } else {
            rows.pop();
        }
    }
    None
}

/// Rays `r_j` with `g_{b_i} · r_j = δ_ij` up to positive scaling, i.e. the
/// columns of the inverse of the basis matrix.
fn initial_rays(gens: &[Vec<BigInt>], basis: &[usize]) -> Vec<Vec<BigInt>> {
    let n = basis.len();
    let aug: Vec<Vec<Scalar>> = basis
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let mut row: Vec<Scalar> = gens[b].iter().cloned().map(Scalar::from_bigint).collect();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let rref = row_reduce(aug, 2 * n);
    debug_assert_eq!(rref.pivots, (0..n).collect::<Vec<_>>());
    (0..n)
        .map(|j| {
            let col: Vec<Scalar> = rref.rows.iter().map(|row| row[n + j].clone()).collect();
            to_primitive_integers(&col)
        })
        .collect()
}

/// Facets of the cone generated by `gens`, which must have full rank equal
/// to the common vector length.
pub(crate) fn double_description(gens: &[Vec<BigInt>]) -> Vec<Ray> {
    let n = gens.len();
    let dim = gens[0].len();
    let basis = initial_basis(gens, dim).expect("generators have full rank");
    let mut rays: Vec<Ray> = initial_rays(gens, &basis)
        .into_iter()
        .enumerate()
        .map(|(j, coords)| {
            let zero_set = BitSet::from_indices(n, basis.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &b)| b));
            Ray { coords, zero_set }
        })
        .collect();

    let mut in_basis = BitSet::new(n);
    for &b in &basis {
        in_basis.insert(b);
    }

    // adjacent rays share at least dim - 2 tight generators
    let min_common = dim.saturating_sub(2);

    for (gi, g) in gens.iter().enumerate() {
        if in_basis.contains(gi) {
            continue;
        }
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        let mut values = Vec::with_capacity(rays.len());
        for (ri, r) in rays.iter_mut().enumerate() {
            let v = int_dot(g, &r.coords);
            match sign(&v) {
                1 => plus.push(ri),
                -1 => minus.push(ri),
                _ => {
                    r.zero_set.insert(gi);
                }
            }
            values.push(v);
        }
        if minus.is_empty() {
            continue;
        }

        let mut fresh = Vec::new();
        for &p in &plus {
            for &m in &minus {
                let common = rays[p].zero_set.intersection(&rays[m].zero_set);
                if common.count() < min_common {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(t, r)| t != p && t != m && common.is_subset(&r.zero_set));
                if blocked {
                    continue;
                }
                let vp = &values[p];
                let vm = &values[m];
                let mut coords: Vec<BigInt> =
                    rays[m].coords.iter().zip(&rays[p].coords).map(|(rm, rp)| vp * rm - vm * rp).collect();
                primitive(&mut coords);
                debug_assert!(int_dot(g, &coords).is_zero());
                let mut zero_set = common;
                zero_set.insert(gi);
                fresh.push(Ray { coords, zero_set });
            }
        }

        let mut keep = BitSet::new(rays.len());
        for (ri, v) in values.iter().enumerate() {
            if sign(v) >= 0 {
                keep.insert(ri);
            }
        }
        let mut next: Vec<Ray> =
            rays.into_iter().enumerate().filter(|(ri, _)| keep.contains(*ri)).map(|(_, r)| r).collect();
        next.extend(fresh);
        rays = next;
    }
    rays
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn square_has_four_facets() {
        let g = gens(&[&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[1, 0, 1]]);
        let rays = double_description(&g);
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r.zero_set.count(), 2);
        }
    }

    #[test]
    fn interior_generators_are_never_tight() {
        let g = gens(&[&[1, 0, 0], &[1, 4, 0], &[1, 0, 4], &[1, 1, 1], &[1, 2, 1]]);
        let rays = double_description(&g);
        assert_eq!(rays.len(), 3);
        assert!(rays.iter().all(|r| !r.zero_set.contains(3) && !r.zero_set.contains(4)));
    }
}

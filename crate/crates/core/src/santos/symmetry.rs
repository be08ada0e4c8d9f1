//! Finite groups of signed permutation matrices and their actions on
//! vertices and facets.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::{apply_map, apply_map_ineq, OrthMap, Point};
use crate::polytope::Polytope;

#[derive(Debug, Clone)]
pub struct SymmetryGroup {
    generators: Vec<OrthMap>,
    elements: Vec<OrthMap>,
}

impl SymmetryGroup {
    /// Closure of the generators under composition, identity first, then in
    /// breadth-first order.
    pub fn generate(generators: Vec<OrthMap>) -> Result<Self> {
        let dim = generators.first().ok_or(Error::EmptyInput)?.dim();
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
        }
        let id = OrthMap::identity(dim);
        let mut seen = BTreeSet::from([id.clone()]);
        let mut elements = alloc::vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(SymmetryGroup { generators, elements })
    }

    pub fn generators(&self) -> &[OrthMap] {
        &self.generators
    }

    pub fn elements(&self) -> &[OrthMap] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &OrthMap) -> bool {
        self.elements.contains(m)
    }

    /// Image index of every vertex under `m`; fails when some image is not
    /// a vertex.
    pub fn vertex_permutation(m: &OrthMap, points: &[Point]) -> Result<Vec<usize>> {
        let index: BTreeMap<&Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let q = apply_map(m, p)?;
                index
                    .get(&q)
                    .copied()
                    .ok_or_else(|| Error::Verification(format!("{m:?} sends vertex {i} to {q}, which is not a vertex")))
            })
            .collect()
    }

    /// Image index of every facet under `m`.
    pub fn facet_permutation(m: &OrthMap, q: &Polytope) -> Result<Vec<usize>> {
        q.facets()
            .iter()
            .enumerate()
            .map(|(f, h)| {
                let image = apply_map_ineq(m, h)?;
                q.facet_index(&image)
                    .ok_or_else(|| Error::Verification(format!("{m:?} sends facet {f} ({h}) off the facet list")))
            })
            .collect()
    }

    /// Orbits of the permutation action given by one permutation per
    /// generator, each sorted, listed by smallest member.
    pub fn orbits(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut orbit_of = alloc::vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for s in 0..n {
            if orbit_of[s] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = alloc::vec![s];
            orbit_of[s] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for p in perms {
                    let y = p[x];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }

    pub fn vertex_orbits(&self, points: &[Point]) -> Result<Vec<Vec<usize>>> {
        let perms: Vec<Vec<usize>> =
            self.generators.iter().map(|g| SymmetryGroup::vertex_permutation(g, points)).collect::<Result<_>>()?;
        Ok(SymmetryGroup::orbits(points.len(), &perms))
    }

    pub fn facet_orbits(&self, q: &Polytope) -> Result<Vec<Vec<usize>>> {
        let perms: Vec<Vec<usize>> =
            self.generators.iter().map(|g| SymmetryGroup::facet_permutation(g, q)).collect::<Result<_>>()?;
        Ok(SymmetryGroup::orbits(q.n_facets(), &perms))
    }
}

/// Negation of one of the first four coordinates in `R^5`.
pub fn sign_flip(i: usize) -> OrthMap {
    let images: Vec<(usize, i8)> = (0..5).map(|j| (j, if j == i { -1 } else { 1 })).collect();
    OrthMap::from_images(&images).expect("signed permutation")
}

/// `x1 <-> x2` together with `x3 <-> x4`.
pub fn double_transposition() -> OrthMap {
    OrthMap::from_images(&[(1, 1), (0, 1), (3, 1), (2, 1), (4, 1)]).expect("signed permutation")
}

/// `(x1, …, x5) -> (x3, x4, x2, x1, -x5)`, which sends vertex `i+` to `i-`.
pub fn base_swap() -> OrthMap {
    OrthMap::from_images(&[(2, 1), (3, 1), (1, 1), (0, 1), (4, -1)]).expect("signed permutation")
}

/// The stabilizer of the plus base, of order 32.
pub fn sigma_plus() -> SymmetryGroup {
    let mut gens: Vec<OrthMap> = (0..4).map(sign_flip).collect();
    gens.push(double_transposition());
    SymmetryGroup::generate(gens).expect("nonempty generators")
}

/// The full symmetry group, of order 64.
pub fn sigma() -> SymmetryGroup {
    let mut gens: Vec<OrthMap> = (0..4).map(sign_flip).collect();
    gens.push(double_transposition());
    gens.push(base_swap());
    SymmetryGroup::generate(gens).expect("nonempty generators")
}

/// `(Σ, Σ⁺)`.
pub fn symmetry_groups() -> (SymmetryGroup, SymmetryGroup) {
    (sigma(), sigma_plus())
}

//! Normal cones, Minkowski sums of prismatoid bases, the pair d-step
//! property, transversality, and flat-torus coordinates of normal maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::TAU;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::{Inequality, Point};
use crate::graph::DualGraph;
use crate::linalg::to_primitive_integers;
use crate::polytope::{Face, Polytope};
use crate::prismatoid::Prismatoid;
use crate::report::Report;
use crate::scalar::Scalar;

/// The normal cone of a vertex, by its generators (normals of the facets at
/// the vertex) and by its facet inequalities `(w - v) · p <= 0`, one per
/// edge `vw`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalCone {
    pub vertex: usize,
    pub generators: Vec<Point>,
    pub inequalities: Vec<Inequality>,
}

impl NormalCone {
    pub fn contains_strictly(&self, dir: &Point) -> bool {
        self.inequalities.iter().all(|h| h.slack(dir).is_positive())
    }

    pub fn contains(&self, dir: &Point) -> bool {
        self.inequalities.iter().all(|h| !h.slack(dir).is_negative())
    }
}

/// Vertices adjacent to `v` in the graph of `p`.
pub fn vertex_neighbors(p: &Polytope, v: usize) -> Vec<usize> {
    (0..p.n_vertices()).filter(|&w| w != v && p.closure(&p.vertex_set([v, w])).count() == 2).collect()
}

pub fn normal_cone(p: &Polytope, v: usize) -> Result<NormalCone> {
    if v >= p.n_vertices() {
        return Err(Error::IndexOutOfRange { index: v, len: p.n_vertices() });
    }
    let generators = p.vertex_facets(v).iter().map(|f| p.facet(f).normal()).collect();
    let mut inequalities: Vec<Inequality> = vertex_neighbors(p, v)
        .into_iter()
        .map(|w| Inequality::new(p.vertex(w).sub(p.vertex(v)).into_coords(), Scalar::zero()))
        .collect::<Result<_>>()?;
    inequalities.sort();
    Ok(NormalCone { vertex: v, generators, inequalities })
}

/// Primitive integer facet normals, in facet order: the vertices of the
/// normal map.
pub fn facet_normals(p: &Polytope) -> Vec<Point> {
    p.facets().iter().map(Inequality::normal).collect()
}

/// A facet of a Minkowski sum with its unique decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiFacet {
    pub facet: usize,
    pub plus: Face,
    pub minus: Face,
    pub bidimension: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct MinkowskiSum {
    pub polytope: Polytope,
    pub facets: Vec<MinkowskiFacet>,
}

pub fn minkowski_sum(plus: &Polytope, minus: &Polytope) -> Result<MinkowskiSum> {
    if plus.ambient_dim() != minus.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: plus.ambient_dim(), found: minus.ambient_dim() });
    }
    let mut points = Vec::with_capacity(plus.n_vertices() * minus.n_vertices());
    for a in plus.vertices() {
        for b in minus.vertices() {
            points.push(a.add(b));
        }
    }
    let polytope = Polytope::convex_hull(points)?;
    let facets = (0..polytope.n_facets())
        .map(|f| {
            let n = polytope.facet(f).normal();
            let fp = plus.face_maximizing(&n)?;
            let fm = minus.face_maximizing(&n)?;
            let bidimension = (fp.dim, fm.dim);
            Ok(MinkowskiFacet { facet: f, plus: fp, minus: fm, bidimension })
        })
        .collect::<Result<_>>()?;
    Ok(MinkowskiSum { polytope, facets })
}

impl MinkowskiSum {
    /// Whether every facet's vertex set is exactly the set of sums of its
    /// two summand faces that are vertices of the sum.
    pub fn decomposition_consistent(&self, plus: &Polytope, minus: &Polytope) -> bool {
        let index: BTreeMap<&Point, usize> = self.polytope.vertices().iter().enumerate().map(|(i, p)| (p, i)).collect();
        self.facets.iter().all(|mf| {
            let mut set = BitSet::new(self.polytope.n_vertices());
            for a in mf.plus.vertices.iter() {
                for b in mf.minus.vertices.iter() {
                    if let Some(&i) = index.get(&plus.vertex(a).add(minus.vertex(b))) {
                        set.insert(i);
                    }
                }
            }
            set == *self.polytope.facet_vertices(mf.facet)
        })
    }

    pub fn bidimension_counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for f in &self.facets {
            *out.entry(f.bidimension).or_insert(0) += 1;
        }
        out
    }
}

/// Coordinate that can be dropped to project the base hyperplanes of a
/// prismatoid injectively: the last one with a nonzero normal entry.
fn projection_coordinate(q: &Prismatoid) -> usize {
    let normal = q.polytope().facet(q.base_plus()).coeffs();
    (0..normal.len()).rev().find(|&j| !normal[j].is_zero()).expect("nonzero normal")
}

fn drop_coordinate(p: &Point, j: usize) -> Point {
    Point::new(p.coords().iter().enumerate().filter(|&(i, _)| i != j).map(|(_, x)| x.clone()).collect())
}

/// The two bases as full-dimensional polytopes in one dimension lower,
/// keeping vertex labels.
pub fn base_projections(q: &Prismatoid) -> Result<(Polytope, Polytope)> {
    let j = projection_coordinate(q);
    let project = |set: &BitSet| -> Result<Polytope> {
        let idx = set.to_vec();
        let vp = q.polytope().vpolytope().select(&idx).map_points(|p| drop_coordinate(p, j))?;
        Polytope::new(vp)
    };
    Ok((project(q.plus_vertices())?, project(q.minus_vertices())?))
}

/// Restriction of a facet normal of the prismatoid to the base direction
/// space, in the projected coordinates, as a primitive vector.
fn restricted_normal(q: &Prismatoid, f: usize, j: usize) -> Point {
    let u = q.polytope().facet(q.base_plus()).coeffs();
    let a = q.polytope().facet(f).coeffs();
    let coords: Vec<Scalar> = (0..a.len()).filter(|&i| i != j).map(|i| &a[i] - &(&(&a[j] * &u[i]) / &u[j])).collect();
    Point::new(to_primitive_integers(&coords).into_iter().map(Scalar::from_bigint).collect())
}

/// Matches every non-base facet of `q` with the facet of the sum of its
/// projected bases having the same restricted normal, and checks that the
/// matching is a bijection carrying the dual graph (minus the bases) onto
/// the sum's dual graph.
pub fn sum_dual_isomorphism(q: &Prismatoid, q_dual: &DualGraph, sum: &MinkowskiSum) -> Result<BTreeMap<usize, usize>> {
    let j = projection_coordinate(q);
    let by_normal: BTreeMap<Point, usize> =
        facet_normals(&sum.polytope).into_iter().enumerate().map(|(i, n)| (n, i)).collect();
    let mut map = BTreeMap::new();
    for f in 0..q.polytope().n_facets() {
        if f == q.base_plus() || f == q.base_minus() {
            continue;
        }
        let n = restricted_normal(q, f, j);
        let &g = by_normal
            .get(&n)
            .ok_or_else(|| Error::Verification(format!("facet {f} has no counterpart with normal {n}")))?;
        map.insert(f, g);
    }
    let images: alloc::collections::BTreeSet<usize> = map.values().copied().collect();
    if images.len() != map.len() || map.len() != sum.polytope.n_facets() {
        return Err(Error::Verification(format!(
            "{} non-base facets against {} facets of the sum",
            map.len(),
            sum.polytope.n_facets()
        )));
    }
    let sum_dual = sum.polytope.dual_graph();
    let mut edges = 0;
    for (a, b) in q_dual.edges() {
        if let (Some(&x), Some(&y)) = (map.get(&a), map.get(&b)) {
            if !sum_dual.has_edge(x, y) {
                return Err(Error::Verification(format!("edge {a}-{b} has no image")));
            }
            edges += 1;
        }
    }
    if edges != sum_dual.edge_count() {
        return Err(Error::Verification(format!("{edges} edges against {}", sum_dual.edge_count())));
    }
    Ok(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairDStep {
    pub holds: bool,
    /// Fewest facets in a sequence from a facet of bidimension `(d-2, *)` to
    /// one of bidimension `(*, d-2)`, consecutive facets adjacent.
    pub min_length: usize,
}

/// Pair d-step property of two polytopes in `R^{d-1}`, via the dual graph of
/// their Minkowski sum.
pub fn pair_dstep_property(plus: &Polytope, minus: &Polytope, d: usize) -> Result<PairDStep> {
    let sum = minkowski_sum(plus, minus)?;
    pair_dstep_of_sum(&sum, d)
}

pub fn pair_dstep_of_sum(sum: &MinkowskiSum, d: usize) -> Result<PairDStep> {
    if d < 3 {
        return Err(Error::Precondition(format!("dimension {d} too small")));
    }
    let top = d - 2;
    let from: Vec<usize> = sum.facets.iter().filter(|f| f.bidimension.0 == top).map(|f| f.facet).collect();
    let to: Vec<usize> = sum.facets.iter().filter(|f| f.bidimension.1 == top).map(|f| f.facet).collect();
    if from.is_empty() || to.is_empty() {
        return Err(Error::Precondition("no facet of the required bidimension".to_string()));
    }
    let dual = sum.polytope.dual_graph();
    let steps = dual.set_distance(&from, &to).ok_or(Error::Disconnected)?;
    let min_length = steps + 1;
    Ok(PairDStep { holds: min_length < d, min_length })
}

/// Non-base facets violating `dim(F ∩ Q⁺) + dim(F ∩ Q⁻) = dim F - 1`.
pub fn transversality_violations(q: &Prismatoid) -> Vec<usize> {
    let want = q.dim() as i64 - 2;
    (0..q.polytope().n_facets())
        .filter(|&f| f != q.base_plus() && f != q.base_minus())
        .filter(|&f| {
            let (a, b) = q.bidimension(f);
            a + b != want
        })
        .collect()
}

pub fn transversality_check(q: &Prismatoid) -> Report {
    let bad = transversality_violations(q);
    let checked = q.polytope().n_facets() - 2;
    let detail = if bad.is_empty() {
        format!("{checked} non-base facets")
    } else {
        format!("{} of {checked} violate, first facet {}", bad.len(), bad[0])
    };
    let mut r = Report::new();
    r.push("transversality", bad.is_empty(), detail);
    r
}

/// Vertex slice of `q` at the height splitting the bases in ratio
/// `λ1 : 1 - λ1`, computed from the edges crossing it; equals
/// `λ1 Q⁺ + (1 - λ1) Q⁻` as a point set.
pub fn intermediate_slice(q: &Prismatoid, lambda1: &Scalar) -> Result<Polytope> {
    if !lambda1.is_positive() || *lambda1 >= Scalar::one() {
        return Err(Error::Precondition(format!("λ1 = {lambda1} is not in (0, 1)")));
    }
    let lambda2 = Scalar::one() - lambda1;
    let p = q.polytope();
    let g = p.vertex_graph();
    let mut points = Vec::new();
    for (a, b) in g.edges() {
        let (v, w) = match (q.plus_vertices().contains(a), q.plus_vertices().contains(b)) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => continue,
        };
        points.push(p.vertex(v).scale(lambda1).add(&p.vertex(w).scale(&lambda2)));
    }
    Polytope::convex_hull(points)
}

/// Each vertex of `p` lies on exactly 8 facets whose ridges among
/// themselves form the graph of a 3-cube.
pub fn cubical_vertex_figures(p: &Polytope, dual: &DualGraph) -> bool {
    (0..p.n_vertices()).all(|v| {
        let facets = p.vertex_facets(v).to_vec();
        facets.len() == 8 && dual.induced(&facets).is_cube_graph()
    })
}

/// Longitude and latitude of a direction `(a e^{ix}, b e^{iy})` of `R^4`.
/// Floating point; for plotting only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    pub x: f64,
    pub y: f64,
}

fn angle(c: f64, s: f64) -> f64 {
    let t = libm::atan2(s, c);
    if t < 0.0 {
        t + TAU
    } else {
        t
    }
}

pub fn torus_project(p: &Point) -> Result<TorusPoint> {
    if p.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: p.dim() });
    }
    let c: Vec<f64> = p.coords().iter().map(Scalar::to_f64).collect();
    if (p[0].is_zero() && p[1].is_zero()) || (p[2].is_zero() && p[3].is_zero()) {
        return Err(Error::Precondition(format!("{p} lies in a coordinate 2-plane")));
    }
    Ok(TorusPoint { x: angle(c[0], c[1]), y: angle(c[2], c[3]) })
}

/// Normal map of a 4-polytope for drawing: facet normals (vertices of the
/// map) and the ridges between them (its edges).
#[derive(Debug, Clone)]
pub struct TorusMap {
    pub labels: Vec<String>,
    pub points: Vec<TorusPoint>,
    pub edges: Vec<(usize, usize)>,
}

pub fn torus_map(p: &Polytope) -> Result<TorusMap> {
    let normals = facet_normals(p);
    let points = normals.iter().map(torus_project).collect::<Result<_>>()?;
    let labels = normals.iter().map(|n| n.to_string()).collect();
    let edges = p.dual_graph().edges().collect();
    Ok(TorusMap { labels, points, edges })
}

fn squares(p: &Point, i: usize, j: usize) -> Scalar {
    &p[i] * &p[i] + &p[j] * &p[j]
}

/// All normals lie on `{x1²+x2² = r12, x3²+x4² = r34}`.
pub fn on_torus(normals: &[Point], r12: i64, r34: i64) -> bool {
    normals.iter().all(|p| squares(p, 0, 1) == Scalar::from_int(r12) && squares(p, 2, 3) == Scalar::from_int(r34))
}

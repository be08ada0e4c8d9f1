//! Vertex and inequality representations, facet enumeration with exact
//! incidences, and the combinatorial queries built on them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::{affine_rank_hom, Inequality, Point};
use crate::graph::{DualGraph, Graph, VertexGraph};
use crate::hull::double_description;
use crate::linalg::{homogenize, int_rank, nullspace, row_reduce};
use crate::scalar::Scalar;

/// A finite point list, read as the vertices of its convex hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    labels: Option<Vec<String>>,
}

impl VPolytope {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let first = vertices.first().ok_or(Error::EmptyInput)?;
        let ambient_dim = first.dim();
        if ambient_dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if let Some(p) = vertices.iter().find(|p| p.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.dim() });
        }
        Ok(VPolytope { ambient_dim, vertices, labels: None })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        VPolytope::new(rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertices.len() {
            return Err(Error::DimensionMismatch { expected: self.vertices.len(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The vertex label, or its index when unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Keeps the listed vertices, in that order.
    pub fn select(&self, indices: &[usize]) -> VPolytope {
        VPolytope {
            ambient_dim: self.ambient_dim,
            vertices: indices.iter().map(|&i| self.vertices[i].clone()).collect(),
            labels: self.labels.as_ref().map(|l| indices.iter().map(|&i| l[i].clone()).collect()),
        }
    }

    /// Applies `f` to every vertex, keeping labels.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<VPolytope> {
        let mut out = VPolytope::new(self.vertices.iter().map(f).collect())?;
        out.labels = self.labels.clone();
        Ok(out)
    }

    pub fn centroid(&self) -> Point {
        let n = Scalar::from_int(self.vertices.len() as i64);
        let mut sum = Point::origin(self.ambient_dim);
        for v in &self.vertices {
            sum = sum.add(v);
        }
        sum.scale(&n.recip())
    }
}

/// Facet inequalities plus the equalities of the affine hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    pub ambient_dim: usize,
    pub inequalities: Vec<Inequality>,
    pub equalities: Vec<Inequality>,
}

impl HPolytope {
    pub fn contains(&self, p: &Point) -> bool {
        self.inequalities.iter().all(|h| !h.slack(p).is_negative())
            && self.equalities.iter().all(|h| h.slack(p).is_zero())
    }
}

/// Facet × vertex incidence: row `f` holds the vertices tight on facet `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetIncidence {
    rows: Vec<BitSet>,
    n_vertices: usize,
}

impl FacetIncidence {
    pub fn from_rows(rows: Vec<BitSet>, n_vertices: usize) -> Self {
        FacetIncidence { rows, n_vertices }
    }

    pub fn n_facets(&self) -> usize {
        self.rows.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn row(&self, f: usize) -> &BitSet {
        &self.rows[f]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn contains(&self, f: usize, v: usize) -> bool {
        self.rows[f].contains(v)
    }

    /// Facets containing vertex `v`.
    pub fn column(&self, v: usize) -> BitSet {
        BitSet::from_indices(
            self.rows.len(),
            self.rows.iter().enumerate().filter(|(_, r)| r.contains(v)).map(|(f, _)| f),
        )
    }

    pub fn transpose(&self) -> FacetIncidence {
        FacetIncidence { rows: (0..self.n_vertices).map(|v| self.column(v)).collect(), n_vertices: self.rows.len() }
    }
}

/// Coordinates on which the affine hull projects injectively, plus the
/// hull's equations.
struct AffineFrame {
    coords: Vec<usize>,
    equalities: Vec<Inequality>,
}

fn affine_frame(points: &[Point]) -> AffineFrame {
    let d = points[0].dim();
    let diffs: Vec<Vec<Scalar>> = points[1..].iter().map(|p| p.sub(&points[0]).into_coords()).collect();
    let coords = row_reduce(diffs, d).pivots;
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let mut r = p.coords().to_vec();
            r.push(Scalar::one());
            r
        })
        .collect();
    let mut equalities: Vec<Inequality> = nullspace(&rows, d + 1)
        .into_iter()
        .map(|mut v| {
            let c = v.pop().expect("nonempty");
            Inequality::new(v, -c).expect("hull equations have a nonzero normal").normalized_hyperplane()
        })
        .collect();
    equalities.sort();
    AffineFrame { coords, equalities }
}

fn check_duplicates(points: &[Point]) -> Result<()> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
    let mut dup: Option<(usize, usize)> = None;
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let pair = (w[0].min(w[1]), w[0].max(w[1]));
            dup = Some(dup.map_or(pair, |d| d.min(pair)));
        }
    }
    match dup {
        Some((first, second)) => Err(Error::DuplicatePoint { first, second }),
        None => Ok(()),
    }
}

/// Complete irredundant facet list of `conv(P)` with exact incidences.
///
/// Works inside the affine hull when `P` is not full-dimensional; the hull
/// equations are returned as `equalities` and the facet inequalities only
/// use the coordinates on which the hull projects injectively. Facets are
/// sorted by canonical coefficients.
pub fn facet_enumeration(p: &VPolytope) -> Result<(HPolytope, FacetIncidence)> {
    let points = p.vertices();
    check_duplicates(points)?;
    let frame = affine_frame(points);
    let dim = frame.coords.len();
    if dim < 1 {
        return Err(Error::Degenerate(dim));
    }
    let gens: Vec<Vec<BigInt>> = points
        .iter()
        .map(|pt| {
            let proj: Vec<Scalar> = frame.coords.iter().map(|&j| pt[j].clone()).collect();
            homogenize(&proj)
        })
        .collect();
    let rays = double_description(&gens);
    let mut facets: Vec<(Inequality, BitSet)> = rays
        .into_iter()
        .map(|ray| {
            let mut coeffs = alloc::vec![Scalar::zero(); p.ambient_dim()];
            for (k, &j) in frame.coords.iter().enumerate() {
                coeffs[j] = Scalar::from_bigint(-&ray.coords[k + 1]);
            }
            let offset = Scalar::from_bigint(ray.coords[0].clone());
            (Inequality::from_primitive_unchecked(coeffs, offset), ray.zero_set)
        })
        .collect();
    facets.sort_by(|a, b| a.0.cmp(&b.0));
    let (inequalities, rows): (Vec<_>, Vec<_>) = facets.into_iter().unzip();
    Ok((
        HPolytope { ambient_dim: p.ambient_dim(), inequalities, equalities: frame.equalities },
        FacetIncidence { rows, n_vertices: points.len() },
    ))
}

/// A face given by its vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: BitSet,
    pub dim: usize,
}

/// A polytope whose listed points are certified vertices, with its facets
/// and incidences.
#[derive(Debug, Clone)]
pub struct Polytope {
    vpoly: VPolytope,
    hpoly: HPolytope,
    incidence: FacetIncidence,
    columns: Vec<BitSet>,
    hom: Vec<Vec<BigInt>>,
    dim: usize,
}

fn int_normal(h: &Inequality) -> Vec<BigInt> {
    h.coeffs().iter().map(|c| c.numer().clone()).collect()
}

impl Polytope {
    /// Enumerates facets and certifies that every listed point is a vertex.
    pub fn new(vpoly: VPolytope) -> Result<Self> {
        let (hpoly, incidence) = facet_enumeration(&vpoly)?;
        let dim = vpoly.ambient_dim() - hpoly.equalities.len();
        let columns: Vec<BitSet> = (0..vpoly.len()).map(|v| incidence.column(v)).collect();
        for (v, col) in columns.iter().enumerate() {
            let normals: Vec<Vec<BigInt>> = col.iter().map(|f| int_normal(&hpoly.inequalities[f])).collect();
            let r = if normals.is_empty() { 0 } else { int_rank(&normals) };
            if r != dim {
                return Err(Error::NotAVertex {
                    index: v,
                    witness: format!(
                        "{} ({}) is tight on {} facets whose normals have rank {} < {}",
                        vpoly.label(v),
                        vpoly.vertices()[v],
                        col.count(),
                        r,
                        dim
                    ),
                });
            }
        }
        let hom = vpoly.vertices().iter().map(|p| homogenize(p.coords())).collect();
        Ok(Polytope { vpoly, hpoly, incidence, columns, hom, dim })
    }

    pub fn from_points(points: Vec<Point>) -> Result<Self> {
        Polytope::new(VPolytope::new(points)?)
    }

    /// Convex hull of arbitrary points: duplicates and non-vertices are
    /// dropped, survivors keep their input order.
    pub fn convex_hull(points: Vec<Point>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let unique: Vec<Point> = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        let vpoly = VPolytope::new(unique)?;
        let (hpoly, incidence) = facet_enumeration(&vpoly)?;
        let dim = vpoly.ambient_dim() - hpoly.equalities.len();
        let keep: Vec<usize> = (0..vpoly.len())
            .filter(|&v| {
                let normals: Vec<Vec<BigInt>> =
                    incidence.column(v).iter().map(|f| int_normal(&hpoly.inequalities[f])).collect();
                !normals.is_empty() && int_rank(&normals) == dim
            })
            .collect();
        Polytope::new(vpoly.select(&keep))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.vpoly.ambient_dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim()
    }

    pub fn n_vertices(&self) -> usize {
        self.vpoly.len()
    }

    pub fn n_facets(&self) -> usize {
        self.hpoly.inequalities.len()
    }

    pub fn vpolytope(&self) -> &VPolytope {
        &self.vpoly
    }

    pub fn hpolytope(&self) -> &HPolytope {
        &self.hpoly
    }

    pub fn incidence(&self) -> &FacetIncidence {
        &self.incidence
    }

    pub fn vertices(&self) -> &[Point] {
        self.vpoly.vertices()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vpoly.vertices()[i]
    }

    pub fn label(&self, i: usize) -> String {
        self.vpoly.label(i)
    }

    pub fn facets(&self) -> &[Inequality] {
        &self.hpoly.inequalities
    }

    pub fn facet(&self, f: usize) -> &Inequality {
        &self.hpoly.inequalities[f]
    }

    pub fn equalities(&self) -> &[Inequality] {
        &self.hpoly.equalities
    }

    /// Position of a canonical inequality in the sorted facet list.
    pub fn facet_index(&self, h: &Inequality) -> Option<usize> {
        self.hpoly.inequalities.binary_search(h).ok()
    }

    pub fn facet_vertices(&self, f: usize) -> &BitSet {
        self.incidence.row(f)
    }

    pub fn vertex_facets(&self, v: usize) -> &BitSet {
        &self.columns[v]
    }

    pub fn vertex_set(&self, indices: impl IntoIterator<Item = usize>) -> BitSet {
        BitSet::from_indices(self.n_vertices(), indices)
    }

    /// The facet whose vertex set is exactly `set`.
    pub fn facet_with_vertices(&self, set: &BitSet) -> Option<usize> {
        self.incidence.rows().iter().position(|r| r == set)
    }

    /// Affine rank of a vertex subset; -1 for the empty set.
    pub fn affine_rank_of(&self, set: &BitSet) -> i64 {
        let rows: Vec<Vec<BigInt>> = set.iter().map(|v| self.hom[v].clone()).collect();
        affine_rank_hom(&rows).map_or(-1, |r| r as i64)
    }

    /// Vertices common to every facet containing `set` (all vertices when no
    /// facet does): the vertex set of the smallest face containing `set`.
    pub fn closure(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.n_vertices());
        for row in self.incidence.rows() {
            if set.is_subset(row) {
                out.intersect_with(row);
            }
        }
        out
    }

    pub fn is_face(&self, set: &BitSet) -> bool {
        !set.is_empty() && self.closure(set) == *set
    }

    /// Facets adjacent across a ridge, decided by the affine rank of the
    /// shared vertices.
    pub fn dual_graph(&self) -> DualGraph {
        let m = self.n_facets();
        let ridge_rank = self.dim as i64 - 2;
        let min_common = self.dim.saturating_sub(1);
        let mut g = Graph::new(m);
        for a in 0..m {
            for b in (a + 1)..m {
                let ra = self.incidence.row(a);
                let rb = self.incidence.row(b);
                if ra.intersection_count(rb) < min_common {
                    continue;
                }
                if self.affine_rank_of(&ra.intersection(rb)) == ridge_rank {
                    g.add_edge(a, b);
                }
            }
        }
        g.finish();
        g
    }

    /// Vertex pairs whose smallest common face is the pair itself.
    pub fn vertex_graph(&self) -> VertexGraph {
        let n = self.n_vertices();
        let min_common = self.dim.saturating_sub(1);
        let mut g = Graph::new(n);
        for v in 0..n {
            for w in (v + 1)..n {
                let common = self.columns[v].intersection(&self.columns[w]);
                if common.count() < min_common {
                    continue;
                }
                let mut face = BitSet::full(n);
                for f in common.iter() {
                    face.intersect_with(self.incidence.row(f));
                }
                if face.count() == 2 {
                    g.add_edge(v, w);
                }
            }
        }
        g.finish();
        g
    }

    /// Every vertex lies on exactly `dim` facets.
    pub fn is_simple(&self) -> bool {
        self.columns.iter().all(|c| c.count() == self.dim)
    }

    /// Every facet has exactly `dim` vertices.
    pub fn is_simplicial(&self) -> bool {
        self.incidence.rows().iter().all(|r| r.count() == self.dim)
    }

    pub fn is_simplex(&self) -> bool {
        self.n_vertices() == self.dim + 1
    }

    /// The face on which the linear functional `c` is maximized.
    pub fn face_maximizing(&self, c: &Point) -> Result<Face> {
        if c.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: c.dim() });
        }
        if c.is_zero() {
            return Err(Error::Precondition("direction must be nonzero".to_string()));
        }
        let values: Vec<Scalar> = self.vertices().iter().map(|v| c.dot(v)).collect();
        let max = values.iter().max().expect("nonempty").clone();
        let vertices = self.vertex_set(values.iter().enumerate().filter(|(_, x)| **x == max).map(|(i, _)| i));
        let dim = self.affine_rank_of(&vertices) as usize;
        Ok(Face { vertices, dim })
    }

    /// Polar after translating the vertex centroid to the origin: vertex `i`
    /// of the result is the normal of facet `i` scaled to value 1 on it.
    pub fn polar(&self) -> Result<VPolytope> {
        self.polar_about(&self.vpoly.centroid())
    }

    /// Polar with respect to an interior point `c`, which is moved to the
    /// origin first.
    pub fn polar_about(&self, c: &Point) -> Result<VPolytope> {
        if !self.is_full_dimensional() {
            return Err(Error::Precondition("polar needs a full-dimensional polytope".to_string()));
        }
        let mut out = Vec::with_capacity(self.n_facets());
        for h in self.facets() {
            let rhs = h.slack(c);
            if !rhs.is_positive() {
                return Err(Error::OriginNotInterior);
            }
            out.push(h.normal().scale(&rhs.recip()));
        }
        VPolytope::new(out)
    }

    /// The vertex set translated so the vertex centroid is the origin.
    pub fn centered(&self) -> Result<VPolytope> {
        let c = self.vpoly.centroid();
        self.vpoly.map_points(|p| p.sub(&c))
    }
}

/// Runs facet enumeration and returns the input if every point is a vertex.
pub fn certify_vertices(p: &VPolytope) -> Result<VPolytope> {
    Polytope::new(p.clone()).map(|q| q.vpoly)
}

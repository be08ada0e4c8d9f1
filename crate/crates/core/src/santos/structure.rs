//! Facet labels, orbits, the orbit quotient of the dual graph, and the
//! incidence facts about representative facets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::data::{expected_facets, facet_a, facet_l, vertex_index, vertex_label, vertices, FacetLabel, VERTICES};
use super::symmetry::SymmetryGroup;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{DualGraph, Graph};
use crate::polytope::Polytope;
use crate::prismatoid::Prismatoid;
use crate::report::Report;
use crate::scalar::Scalar;

/// The 48-vertex prismatoid with bases `x5 = 1` (plus) and `x5 = -1`.
pub fn santos_prismatoid() -> Prismatoid {
    from_polytope(Polytope::new(vertices()).expect("static vertices are in convex position"))
        .expect("static data forms a prismatoid")
}

/// Wraps an already enumerated copy of the 48 points, locating the two
/// base facets.
pub fn from_polytope(q: Polytope) -> Result<Prismatoid> {
    let a = q.facet_index(&facet_a()).ok_or_else(|| Error::Verification("facet A missing".to_string()))?;
    let l = q.facet_index(&facet_l()).ok_or_else(|| Error::Verification("facet L missing".to_string()))?;
    Prismatoid::new(q, a, l)
}

/// Family label of every facet, in facet order.
pub fn label_facets(q: &Polytope) -> Result<Vec<FacetLabel>> {
    let table: BTreeMap<_, _> = expected_facets().into_iter().map(|(l, h)| (h, l)).collect();
    q.facets()
        .iter()
        .map(|h| table.get(h).cloned().ok_or_else(|| Error::Verification(format!("facet {h} matches no table row"))))
        .collect()
}

/// Facet index of every label.
pub fn label_index(labels: &[FacetLabel]) -> BTreeMap<FacetLabel, usize> {
    labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect()
}

/// Letter of the facet family that the base swap sends this one to.
pub fn swapped_letter(family: &str) -> &'static str {
    const PAIRS: [(&str, &str); 6] = [("A", "L"), ("B", "K"), ("C", "J"), ("D", "I"), ("E", "H"), ("F", "G")];
    for (a, b) in PAIRS {
        if family == a {
            return b;
        }
        if family == b {
            return a;
        }
    }
    ""
}

/// Representative facets with their tight vertex sets.
pub const INCIDENCES: [(&str, &[&str]); 5] = [
    ("B++++", &["1+", "5+", "9+", "13+", "17+", "21+", "5-"]),
    ("C++++", &["9+", "13+", "17+", "21+", "5-", "13-"]),
    ("D++++", &["5+", "13+", "17+", "5-", "17-"]),
    ("E++++", &["13+", "17+", "5-", "13-", "17-"]),
    ("F++++", &["13+", "21+", "5-", "13-", "17-"]),
];

/// Dual-graph neighbors of the representative facets, with primes on the
/// G to K families following the table's forms.
pub const NEIGHBOR_LISTS: [(&str, &[&str]); 5] = [
    ("B++++", &["A", "B+-++", "B++-+", "B+++-", "C++++", "D++++"]),
    ("C++++", &["B++++", "C++-+", "C+++-", "C'++++", "E++++", "F++++"]),
    ("D++++", &["B++++", "D+-++", "D+++-", "E++++", "G'++++"]),
    ("E++++", &["C++++", "D++++", "E+++-", "F++++", "G'++++"]),
    ("F++++", &["C++++", "E++++", "F+-++", "H++++", "I++++"]),
];

fn labels_to_set(q: &Polytope, labels: &[&str]) -> BitSet {
    q.vertex_set(labels.iter().map(|l| vertex_index(l).expect("valid vertex label")))
}

fn set_to_labels(set: &BitSet) -> String {
    let parts: Vec<String> = set.iter().map(vertex_label).collect();
    format!("{{{}}}", parts.join(","))
}

/// Validity, exact tight set, affine rank and size of each representative.
pub fn verify_incidences(q: &Polytope) -> Report {
    let table: BTreeMap<_, _> = expected_facets().into_iter().collect();
    let mut report = Report::new();
    for (name, tight) in INCIDENCES {
        let h = &table[&FacetLabel::parse(name).expect("valid facet label")];
        let mut problems = Vec::new();
        let mut got = BitSet::new(q.n_vertices());
        for (i, v) in q.vertices().iter().enumerate() {
            let s = h.slack(v);
            if s.is_negative() {
                problems.push(format!("{} violates", vertex_label(i)));
            } else if s.is_zero() {
                got.insert(i);
            }
        }
        let want = labels_to_set(q, tight);
        if got != want {
            problems.push(format!("tight on {} expected {}", set_to_labels(&got), set_to_labels(&want)));
        }
        let rank = q.affine_rank_of(&got);
        if rank != 4 {
            problems.push(format!("affine rank {rank}"));
        }
        let detail = if problems.is_empty() {
            format!("{} vertices {}", got.count(), set_to_labels(&got))
        } else {
            problems.join("; ")
        };
        report.push(format!("incidence-{name}"), problems.is_empty(), detail);
    }
    report
}

fn combo(points: &[Point], terms: &[(Scalar, &str)]) -> Point {
    let mut out = Point::origin(points[0].dim());
    for (c, l) in terms {
        out = out.add(&points[vertex_index(l).expect("valid vertex label")].scale(c));
    }
    out
}

/// The three rays through `o = (-30, 0, 120, 0, 1)` and the quadrilateral
/// relation among `9+, 13+, 17+, 21+`, evaluated on the 48 points given in
/// table order.
pub fn verify_prism_structure(points: &[Point]) -> Report {
    let mut report = Report::new();
    if points.len() != VERTICES.len() || points.iter().any(|p| p.dim() != 5) {
        report.push("prism-structure", false, format!("{} points, expected 48 in dimension 5", points.len()));
        return report;
    }
    let o = Point::from_ints(&[-30, 0, 120, 0, 1]);
    let q = |n, d| Scalar::ratio(n, d);
    let z = Scalar::from_int;
    let rays = [
        ("ray-1+5+", combo(points, &[(q(8, 3), "5+"), (q(-5, 3), "1+")])),
        ("ray-9+17+", combo(points, &[(z(3), "17+"), (z(-2), "9+")])),
        ("ray-21+13+", combo(points, &[(z(4), "13+"), (z(-3), "21+")])),
    ];
    for (name, p) in rays {
        report.push(name, p == o, p.to_string());
    }
    let lhs = combo(points, &[(z(2), "9+"), (z(4), "13+")]);
    let rhs = combo(points, &[(z(3), "17+"), (z(3), "21+")]);
    let detail = format!("{lhs} vs {rhs}");
    report.push("quadrilateral", lhs == rhs, detail);
    report
}

/// The dual graph modulo a group action on facets.
#[derive(Debug, Clone)]
pub struct OrbitQuotient {
    pub orbits: Vec<Vec<usize>>,
    pub orbit_of: Vec<usize>,
    pub graph: Graph,
}

impl OrbitQuotient {
    pub fn new(dual: &DualGraph, orbits: Vec<Vec<usize>>) -> Self {
        let mut orbit_of = alloc::vec![0; dual.node_count()];
        for (k, o) in orbits.iter().enumerate() {
            for &f in o {
                orbit_of[f] = k;
            }
        }
        let mut graph = Graph::new(orbits.len());
        for (a, b) in dual.edges() {
            if orbit_of[a] != orbit_of[b] {
                graph.add_edge(orbit_of[a], orbit_of[b]);
            }
        }
        graph.finish();
        OrbitQuotient { orbits, orbit_of, graph }
    }

    pub fn distance(&self, f: usize, g: usize) -> Result<usize> {
        self.graph.distance(self.orbit_of[f], self.orbit_of[g])
    }
}

pub fn orbit_adjacency_graph(q: &Polytope, dual: &DualGraph, group: &SymmetryGroup) -> Result<OrbitQuotient> {
    Ok(OrbitQuotient::new(dual, group.facet_orbits(q)?))
}

/// Orbit-level adjacencies read off the neighbor lists, closed under the
/// base swap.
pub fn expected_family_edges() -> BTreeSet<(String, String)> {
    let mut edges = BTreeSet::new();
    let mut add = |a: &str, b: &str| {
        if a != b {
            let (x, y) = if a < b { (a, b) } else { (b, a) };
            edges.insert((x.to_string(), y.to_string()));
        }
    };
    for (rep, list) in NEIGHBOR_LISTS {
        let a = FacetLabel::parse(rep).expect("valid facet label");
        for n in list {
            let b = FacetLabel::parse(n).expect("valid facet label");
            add(a.family(), b.family());
            add(swapped_letter(a.family()), swapped_letter(b.family()));
        }
    }
    edges
}

/// Orbit-level adjacencies actually present, named by family letter.
pub fn family_edges(quotient: &OrbitQuotient, labels: &[FacetLabel]) -> Result<BTreeSet<(String, String)>> {
    let name = |k: usize| -> Result<String> {
        let families: BTreeSet<&str> = quotient.orbits[k].iter().map(|&f| labels[f].family()).collect();
        if families.len() != 1 {
            return Err(Error::Verification(format!("orbit {k} mixes families {families:?}")));
        }
        Ok(families.into_iter().next().expect("nonempty").to_string())
    };
    let mut edges = BTreeSet::new();
    for (a, b) in quotient.graph.edges() {
        let (x, y) = (name(a)?, name(b)?);
        edges.insert(if x < y { (x, y) } else { (y, x) });
    }
    Ok(edges)
}

/// Actual dual-graph neighbors of each representative against the lists.
pub fn verify_neighbor_lists(dual: &DualGraph, labels: &[FacetLabel]) -> Report {
    let index = label_index(labels);
    let mut report = Report::new();
    for (rep, list) in NEIGHBOR_LISTS {
        let Some(&f) = FacetLabel::parse(rep).and_then(|l| index.get(&l)) else {
            report.push(format!("neighbors-{rep}"), false, "representative facet missing");
            continue;
        };
        let got: BTreeSet<String> = dual.neighbors(f).iter().map(|&g| labels[g].to_string()).collect();
        let want: BTreeSet<String> = list.iter().map(|s| s.to_string()).collect();
        let detail = format!("{{{}}}", got.iter().cloned().collect::<Vec<_>>().join(","));
        report.push(format!("neighbors-{rep}"), got == want, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prism_identities_hold() {
        assert!(verify_prism_structure(vertices().vertices()).all_pass());
    }

    #[test]
    fn family_edges_close_under_swap() {
        let e = expected_family_edges();
        assert!(e.contains(&("A".into(), "B".into())));
        assert!(e.contains(&("K".into(), "L".into())));
        assert!(e.contains(&("G".into(), "J".into())));
        assert_eq!(e.len(), 18);
    }
}

//! The two bases as 4-polytopes and the facts about their normal maps.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::data::{base, vertex_index, vertices};
use super::symmetry::sigma_plus;
use crate::error::Result;
use crate::fans::{cubical_vertex_figures, facet_normals, normal_cone, on_torus};
use crate::geometry::{Inequality, Point};
use crate::polytope::Polytope;
use crate::report::Report;

/// `(Q⁺, Q⁻)` in `R^4`, vertex `i` of each carrying label `i+1` with its sign.
pub fn bases() -> (Polytope, Polytope) {
    (
        Polytope::new(base(true)).expect("plus base is in convex position"),
        Polytope::new(base(false)).expect("minus base is in convex position"),
    )
}

/// `±5x1 ± x2 ± 2x3 ± x4 <= 90` and `±x1 ± 5x2 ± x3 ± 2x4 <= 90`.
pub fn plus_base_facet_forms() -> Vec<Inequality> {
    let mut out = Vec::new();
    for base_row in [[5, 1, 2, 1], [1, 5, 1, 2]] {
        for m in 0..16 {
            let c: Vec<i64> = (0..4).map(|i| if m & (1 << i) != 0 { -base_row[i] } else { base_row[i] }).collect();
            out.push(Inequality::from_ints(&c, 90).expect("nonzero normal"));
        }
    }
    out.sort();
    out
}

/// The Σ⁺-orbit of a vertex, as indices into its own base.
fn base_orbit(label: &str) -> Vec<usize> {
    let v = vertices();
    let orbits = sigma_plus().vertex_orbits(v.vertices()).expect("Σ⁺ permutes the vertices");
    let i = vertex_index(label).expect("valid vertex label");
    let offset = if i < 24 { 0 } else { 24 };
    orbits
        .into_iter()
        .find(|o| o.contains(&i))
        .expect("every vertex has an orbit")
        .iter()
        .map(|&j| j - offset)
        .collect()
}

/// Facet normals of the plus base must satisfy `x1²+x2² = 26, x3²+x4² = 5`,
/// those of the minus base the swapped equations.
pub fn torus_membership_check(plus: &Polytope, minus: &Polytope) -> Report {
    let mut r = Report::new();
    let gp = facet_normals(plus);
    let gm = facet_normals(minus);
    r.push("torus-plus", gp.len() == 32 && on_torus(&gp, 26, 5), format!("{} normals", gp.len()));
    r.push("torus-minus", gm.len() == 32 && on_torus(&gm, 5, 26), format!("{} normals", gm.len()));
    r
}

pub fn plus_base_facet_check(plus: &Polytope) -> Report {
    let mut r = Report::new();
    let ok = plus.facets() == plus_base_facet_forms().as_slice();
    r.push("plus-base-facets", ok, format!("{} facets", plus.n_facets()));
    r
}

/// Each vertex of the plus base sits on 8 facets forming a 3-cube.
pub fn cubical_figure_check(plus: &Polytope) -> Report {
    let mut r = Report::new();
    let ok = cubical_vertex_figures(plus, &plus.dual_graph());
    r.push("cubical-plus", ok, format!("{} vertex figures", plus.n_vertices()));
    r
}

/// Vertex of `p` (within `candidates`) whose normal cone strictly contains `dir`.
fn containing_cone(p: &Polytope, candidates: &[usize], dir: &Point) -> Result<Option<usize>> {
    for &c in candidates {
        if normal_cone(p, c)?.contains_strictly(dir) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn part12(from: &Polytope, into: &Polytope, orbit: &[usize], name: &str, r: &mut Report) -> Result<()> {
    let mut missing: Vec<String> = Vec::new();
    for n in facet_normals(from) {
        if containing_cone(into, orbit, &n)?.is_none() {
            missing.push(n.to_string());
        }
    }
    let detail = if missing.is_empty() {
        format!("{} normals inside cones of {}", from.n_facets(), orbit_labels(into, orbit))
    } else {
        format!("not strictly inside: {}", missing.join(" "))
    };
    r.push(name, missing.is_empty(), detail);
    Ok(())
}

fn orbit_labels(p: &Polytope, orbit: &[usize]) -> String {
    let l: Vec<String> = orbit.iter().map(|&i| p.label(i)).collect();
    l.join(",")
}

/// The three separation properties between the two normal maps: facet
/// normals of each base fall in open cones of one vertex orbit of the
/// other, and no such cone meets the facet it came from.
pub fn separation_check(plus: &Polytope, minus: &Polytope) -> Result<Report> {
    let mut r = Report::new();
    let orbit_plus = base_orbit("7+");
    let orbit_minus = base_orbit("7-");
    part12(minus, plus, &orbit_plus, "separation-1", &mut r)?;
    part12(plus, minus, &orbit_minus, "separation-2", &mut r)?;

    // For a facet normal v of Q⁺ strictly inside cone(c), c a vertex of Q⁻,
    // the vertices of cone(c) are the normals of the facets of Q⁻ at c. The
    // cells of G⁺ containing such a normal n are the cones of the vertices of
    // Q⁺ maximizing n; none of them may have v as a vertex, i.e. lie on the
    // facet of Q⁺ with normal v.
    let all_minus: Vec<usize> = (0..minus.n_vertices()).collect();
    let mut bad: Vec<String> = Vec::new();
    for (fv, v) in facet_normals(plus).into_iter().enumerate() {
        let Some(c) = containing_cone(minus, &all_minus, &v)? else {
            bad.push(format!("{v} in no open cone"));
            continue;
        };
        for g in minus.vertex_facets(c).iter() {
            let n = minus.facet(g).normal();
            let cells = plus.face_maximizing(&n)?.vertices;
            if !cells.intersection(plus.facet_vertices(fv)).is_empty() {
                bad.push(format!("{v} in cone({}) meets {n}", minus.label(c)));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{} normals", plus.n_facets()) } else { bad.join("; ") };
    r.push("separation-3", bad.is_empty(), detail);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cone_of_5_minus() {
        let (_, minus) = bases();
        let i = minus.vpolytope().index_of_label("5-").unwrap();
        let cone = normal_cone(&minus, i).unwrap();
        let mut want: Vec<Inequality> = vec![
            Inequality::from_ints(&[-1, 2, 0, 0], 0).unwrap(),
            Inequality::from_ints(&[-1, -2, 0, 0], 0).unwrap(),
            Inequality::from_ints(&[-1, 0, 2, 0], 0).unwrap(),
            Inequality::from_ints(&[-1, 0, -2, 0], 0).unwrap(),
            Inequality::from_ints(&[-5, 0, 0, 2], 0).unwrap(),
            Inequality::from_ints(&[-5, 0, 0, -2], 0).unwrap(),
        ];
        want.sort();
        assert_eq!(cone.inequalities, want);
        assert!(cone.contains_strictly(&Point::from_ints(&[5, 1, 2, 1])));
        let mut gens: Vec<Point> = cone.generators.clone();
        gens.sort();
        let mut eight = Vec::new();
        for m in 0..8 {
            let s = |b: i64| if m & b != 0 { -1 } else { 1 };
            eight.push(Point::from_ints(&[2, s(1), s(2), 5 * s(4)]));
        }
        eight.sort();
        assert_eq!(gens, eight);
    }

    #[test]
    fn cells_through_cone_5_minus() {
        let (plus, minus) = bases();
        let c = minus.vpolytope().index_of_label("5-").unwrap();
        let mut cells = alloc::collections::BTreeSet::new();
        for g in minus.vertex_facets(c).iter() {
            for v in plus.face_maximizing(&minus.facet(g).normal()).unwrap().vertices.iter() {
                cells.insert(plus.label(v));
            }
        }
        assert_eq!(cells.into_iter().collect::<Vec<_>>(), ["7+", "8+"]);
    }

    #[test]
    fn seven_plus_orbit() {
        assert_eq!(base_orbit("7+"), [4, 5, 6, 7]);
        assert_eq!(base_orbit("7-"), [4, 5, 6, 7]);
    }
}

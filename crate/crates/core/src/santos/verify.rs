//! The whole verification suite run on a candidate copy of the 48 points.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::data::{expected_facets, FacetLabel};
use super::maps::{cubical_figure_check, plus_base_facet_check, separation_check, torus_membership_check};
use super::structure::{
    expected_family_edges, family_edges, from_polytope, label_facets, orbit_adjacency_graph, verify_incidences,
    verify_neighbor_lists, verify_prism_structure,
};
use super::symmetry::{base_swap, symmetry_groups, SymmetryGroup};
use crate::fans::{base_projections, minkowski_sum, pair_dstep_of_sum, sum_dual_isomorphism, transversality_check};
use crate::polytope::{Polytope, VPolytope};
use crate::prismatoid::is_spindle;
use crate::report::Report;

fn sizes(orbits: &[Vec<usize>]) -> Vec<usize> {
    let mut s: Vec<usize> = orbits.iter().map(Vec::len).collect();
    s.sort_unstable();
    s
}

fn err_detail(e: impl ToString) -> String {
    e.to_string()
}

/// Runs every check on `points`, expected in table order (`1+..24+`, then
/// `1-..24-`). Checks that cannot run because an earlier one failed are
/// reported as failures.
pub fn verify_santos(points: &VPolytope) -> Report {
    let mut r = Report::new();
    r.extend(verify_prism_structure(points.vertices()));
    if points.len() != 48 || points.ambient_dim() != 5 {
        r.push("input", false, format!("{} points in dimension {}", points.len(), points.ambient_dim()));
        return r;
    }
    let q = match Polytope::new(points.clone()) {
        Ok(q) => q,
        Err(e) => {
            r.push("vertices", false, err_detail(e));
            return r;
        }
    };
    r.push("vertices", q.n_vertices() == 48 && q.dim() == 5, format!("{} vertices dim {}", q.n_vertices(), q.dim()));

    let got: BTreeSet<_> = q.facets().iter().cloned().collect();
    let want: BTreeSet<_> = expected_facets().into_iter().map(|(_, h)| h).collect();
    let missing = want.difference(&got).count();
    let extra = got.difference(&want).count();
    r.push(
        "facet-census",
        missing == 0 && extra == 0,
        format!("{} facets, {missing} missing, {extra} unexpected", q.n_facets()),
    );

    let q = match from_polytope(q) {
        Ok(q) => q,
        Err(e) => {
            r.push("prismatoid", false, err_detail(e));
            return r;
        }
    };
    let plus_ok = q.plus_vertices().to_vec() == (0..24).collect::<Vec<_>>();
    r.push("prismatoid", plus_ok, format!("bases {} and {}", q.base_plus(), q.base_minus()));
    let dual = q.polytope().dual_graph();
    let width = q.width_in(&dual);
    r.push("width", width == 6, format!("{width}"));
    r.push("dstep-property", !q.has_dstep_property(), format!("width {width} > dim {}", q.dim()));

    let (sigma, sigma_plus) = symmetry_groups();
    r.push(
        "group-orders",
        sigma.order() == 64 && sigma_plus.order() == 32,
        format!("{} {}", sigma.order(), sigma_plus.order()),
    );
    let swap = SymmetryGroup::vertex_permutation(&base_swap(), q.polytope().vertices());
    let swap_ok = swap.as_ref().is_ok_and(|p| (0..24).all(|i| p[i] == i + 24));
    r.push("base-swap", swap_ok, "i+ goes to i-");
    let sym = sigma.elements().iter().try_for_each(|m| {
        SymmetryGroup::vertex_permutation(m, q.polytope().vertices())?;
        SymmetryGroup::facet_permutation(m, q.polytope()).map(|_| ())
    });
    r.push("symmetries", sym.is_ok(), sym.err().map_or("64 maps permute vertices and facets".to_string(), err_detail));

    let labels = match label_facets(q.polytope()) {
        Ok(l) => l,
        Err(e) => {
            r.push("labels", false, err_detail(e));
            return r;
        }
    };
    r.push("labels", true, format!("{} labeled facets", labels.len()));

    match (sigma_plus.facet_orbits(q.polytope()), sigma.facet_orbits(q.polytope())) {
        (Ok(plus), Ok(full)) => {
            let single_family =
                plus.iter().all(|o| o.iter().map(|&g| labels[g].family()).collect::<BTreeSet<_>>().len() == 1);
            let want: Vec<usize> = [1, 1].into_iter().chain([32; 10]).collect();
            r.push("orbits-sigma-plus", sizes(&plus) == want && single_family, format!("{:?}", sizes(&plus)));
            let pairs: BTreeSet<BTreeSet<&str>> =
                full.iter().map(|o| o.iter().map(|&g| labels[g].family()).collect()).collect();
            let want_pairs: BTreeSet<BTreeSet<&str>> =
                [["A", "L"], ["B", "K"], ["C", "J"], ["D", "I"], ["E", "H"], ["F", "G"]]
                    .iter()
                    .map(|p| p.iter().copied().collect())
                    .collect();
            r.push("orbits-sigma", pairs == want_pairs, format!("{} orbits", full.len()));
        }
        (Err(e), _) | (_, Err(e)) => r.push("orbits", false, err_detail(e)),
    }
    match orbit_adjacency_graph(q.polytope(), &dual, &sigma_plus) {
        Ok(quotient) => {
            let edges = family_edges(&quotient, &labels);
            let ok = edges.as_ref().is_ok_and(|e| *e == expected_family_edges());
            r.push("orbit-adjacency", ok, format!("{} orbit edges", quotient.graph.edge_count()));
            match quotient.distance(q.base_plus(), q.base_minus()) {
                Ok(d) => r.push("orbit-distance", d == 6, d.to_string()),
                Err(e) => r.push("orbit-distance", false, err_detail(e)),
            }
        }
        Err(e) => r.push("orbit-adjacency", false, err_detail(e)),
    }
    r.extend(verify_neighbor_lists(&dual, &labels));
    r.extend(verify_incidences(q.polytope()));

    let index: BTreeMap<&FacetLabel, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut bidim_bad = Vec::new();
    for (g, label) in labels.iter().enumerate() {
        if g != q.base_plus() && g != q.base_minus() {
            let (a, b) = q.bidimension(g);
            if a + b != 3 {
                bidim_bad.push(format!("{label}=({a},{b})"));
            }
        }
    }
    let want_bidim = [
        ("B++++", (3, 0)),
        ("C++++", (2, 1)),
        ("D++++", (2, 1)),
        ("E++++", (1, 2)),
        ("F++++", (1, 2)),
        ("K++++", (0, 3)),
    ];
    for (name, bd) in want_bidim {
        let f = FacetLabel::parse(name).and_then(|l| index.get(&l).copied());
        if f.map(|f| q.bidimension(f)) != Some(bd) {
            bidim_bad.push(format!("{name} not {bd:?}"));
        }
    }
    let detail = if bidim_bad.is_empty() { "every side facet sums to 3".to_string() } else { bidim_bad.join(" ") };
    r.push("bidimensions", bidim_bad.is_empty(), detail);

    match q.polytope().polar().and_then(Polytope::new) {
        Ok(polar) => {
            let spindle = is_spindle(&polar);
            let ok = polar.n_vertices() == 322 && polar.n_facets() == 48 && spindle.is_some_and(|s| s.2 == 6);
            let len = spindle.map_or("none".to_string(), |s| s.2.to_string());
            r.push(
                "polar-spindle",
                ok,
                format!("{} vertices {} facets length {len}", polar.n_vertices(), polar.n_facets()),
            );
        }
        Err(e) => r.push("polar-spindle", false, err_detail(e)),
    }

    let (plus, minus) = match base_projections(&q) {
        Ok(b) => b,
        Err(e) => {
            r.push("bases", false, err_detail(e));
            return r;
        }
    };
    r.extend(plus_base_facet_check(&plus));
    r.extend(cubical_figure_check(&plus));
    r.extend(torus_membership_check(&plus, &minus));
    match minkowski_sum(&plus, &minus) {
        Ok(sum) => {
            let n = sum.polytope.n_facets();
            r.push("sum-facets", n == 320 && sum.decomposition_consistent(&plus, &minus), format!("{n}"));
            let iso = sum_dual_isomorphism(&q, &dual, &sum);
            r.push(
                "sum-dual-graph",
                iso.is_ok(),
                iso.err().map_or("isomorphic to Q minus its bases".to_string(), err_detail),
            );
            match pair_dstep_of_sum(&sum, 5) {
                Ok(p) => r.push(
                    "pair-dstep",
                    !p.holds && p.min_length == 5,
                    format!("holds={} min_length={}", p.holds, p.min_length),
                ),
                Err(e) => r.push("pair-dstep", false, err_detail(e)),
            }
        }
        Err(e) => r.push("sum-facets", false, err_detail(e)),
    }
    r.extend(transversality_check(&q));
    match separation_check(&plus, &minus) {
        Ok(rep) => r.extend(rep),
        Err(e) => r.push("separation", false, err_detail(e)),
    }
    r
}

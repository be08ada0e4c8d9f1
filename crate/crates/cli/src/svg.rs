//! Flat-torus drawings of normal maps.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use hirsch_core::fans::TorusMap;

const COLORS: [&str; 2] = ["#c0392b", "#2471a3"];

fn px(angle: f64, size: f64) -> f64 {
    angle / TAU * size
}

/// Unit offsets (in whole turns) that bring `b` closest to `a` on the torus.
fn shift(a: f64, b: f64) -> f64 {
    if b - a > TAU / 2.0 {
        -TAU
    } else if a - b > TAU / 2.0 {
        TAU
    } else {
        0.0
    }
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, color: &str) {
    let _ = writeln!(
        out,
        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="1"/>"#
    );
}

/// Edges that wrap are drawn twice, once from each endpoint, and clipped
/// by the frame.
pub fn torus_svg(maps: &[(&str, &TorusMap)], size: u32) -> String {
    let s = f64::from(size);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        r#"<defs><clipPath id="frame"><rect x="0" y="0" width="{size}" height="{size}"/></clipPath></defs>"#
    );
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="black"/>"#);
    for (k, (name, map)) in maps.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let _ = writeln!(out, r#"<g id="{name}" clip-path="url(#frame)">"#);
        for &(a, b) in &map.edges {
            let (p, q) = (&map.points[a], &map.points[b]);
            let (dx, dy) = (shift(p.x, q.x), shift(p.y, q.y));
            line(&mut out, px(p.x, s), px(p.y, s), px(q.x + dx, s), px(q.y + dy, s), color);
            if dx != 0.0 || dy != 0.0 {
                line(&mut out, px(p.x - dx, s), px(p.y - dy, s), px(q.x, s), px(q.y, s), color);
            }
        }
        for (p, label) in map.points.iter().zip(&map.labels) {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{color}"><title>{label}</title></circle>"#,
                px(p.x, s),
                px(p.y, s)
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hirsch_core::fans::TorusPoint;

    #[test]
    fn wrapping_edge_is_split() {
        let map = TorusMap {
            labels: vec!["a".into(), "b".into()],
            points: vec![TorusPoint { x: 0.1, y: 1.0 }, TorusPoint { x: TAU - 0.1, y: 1.0 }],
            edges: vec![(0, 1)],
        };
        let svg = torus_svg(&[("g", &map)], 100);
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.ends_with("</svg>\n"));
    }
}

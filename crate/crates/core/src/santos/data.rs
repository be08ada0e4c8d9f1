//! The 48 labeled vertices and the 22 facet forms of the width-six
//! 5-prismatoid.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{Inequality, Point};
use crate::polytope::VPolytope;
use crate::scalar::Scalar;

/// Rows `1+ … 24+` (on `x5 = 1`) followed by `1- … 24-` (on `x5 = -1`).
pub const VERTICES: [[i64; 5]; 48] = [
    [18, 0, 0, 0, 1],
    [-18, 0, 0, 0, 1],
    [0, 18, 0, 0, 1],
    [0, -18, 0, 0, 1],
    [0, 0, 45, 0, 1],
    [0, 0, -45, 0, 1],
    [0, 0, 0, 45, 1],
    [0, 0, 0, -45, 1],
    [15, 15, 0, 0, 1],
    [-15, 15, 0, 0, 1],
    [15, -15, 0, 0, 1],
    [-15, -15, 0, 0, 1],
    [0, 0, 30, 30, 1],
    [0, 0, -30, 30, 1],
    [0, 0, 30, -30, 1],
    [0, 0, -30, -30, 1],
    [0, 10, 40, 0, 1],
    [0, -10, 40, 0, 1],
    [0, 10, -40, 0, 1],
    [0, -10, -40, 0, 1],
    [10, 0, 0, 40, 1],
    [-10, 0, 0, 40, 1],
    [10, 0, 0, -40, 1],
    [-10, 0, 0, -40, 1],
    [0, 0, 0, 18, -1],
    [0, 0, 0, -18, -1],
    [0, 0, 18, 0, -1],
    [0, 0, -18, 0, -1],
    [45, 0, 0, 0, -1],
    [-45, 0, 0, 0, -1],
    [0, 45, 0, 0, -1],
    [0, -45, 0, 0, -1],
    [0, 0, 15, 15, -1],
    [0, 0, 15, -15, -1],
    [0, 0, -15, 15, -1],
    [0, 0, -15, -15, -1],
    [30, 30, 0, 0, -1],
    [-30, 30, 0, 0, -1],
    [30, -30, 0, 0, -1],
    [-30, -30, 0, 0, -1],
    [40, 0, 10, 0, -1],
    [40, 0, -10, 0, -1],
    [-40, 0, 10, 0, -1],
    [-40, 0, -10, 0, -1],
    [0, 40, 0, 10, -1],
    [0, 40, 0, -10, -1],
    [0, -40, 0, 10, -1],
    [0, -40, 0, -10, -1],
];

/// Label of row `i`: `"1+"`, …, `"24+"`, `"1-"`, …, `"24-"`.
pub fn vertex_label(i: usize) -> String {
    if i < 24 {
        format!("{}+", i + 1)
    } else {
        format!("{}-", i - 23)
    }
}

/// Index of a label such as `"13+"` or `"5-"`.
pub fn vertex_index(label: &str) -> Option<usize> {
    let (num, side) = label.split_at(label.len().checked_sub(1)?);
    let k: usize = num.parse().ok()?;
    if !(1..=24).contains(&k) {
        return None;
    }
    match side {
        "+" => Some(k - 1),
        "-" => Some(k + 23),
        _ => None,
    }
}

pub fn vertices() -> VPolytope {
    let pts = VERTICES.iter().map(|r| Point::from_ints(r)).collect();
    VPolytope::new(pts)
        .and_then(|p| p.with_labels((0..48).map(vertex_label).collect()))
        .expect("static data is well formed")
}

/// One base in `R^4` (last coordinate dropped): `plus = true` gives the 24
/// vertices on `x5 = 1`.
pub fn base(plus: bool) -> VPolytope {
    let range = if plus { 0..24 } else { 24..48 };
    let pts = VERTICES[range.clone()].iter().map(|r| Point::from_ints(&r[..4])).collect();
    VPolytope::new(pts)
        .and_then(|p| p.with_labels(range.map(vertex_label).collect()))
        .expect("static data is well formed")
}

/// A row of the facet table: `constant + x5_coeff·x5 ≥ Σ ±c_i x_{j_i}`,
/// where the i-th sign of the pattern applies to the i-th listed term.
#[derive(Debug, Clone)]
pub struct FacetForm {
    pub letter: &'static str,
    pub constant: Scalar,
    pub x5_coeff: Scalar,
    /// `(coefficient, zero-based coordinate)` in listed order.
    pub terms: [(Scalar, usize); 4],
}

impl FacetForm {
    pub fn inequality(&self, signs: [i8; 4]) -> Inequality {
        let mut coeffs: Vec<Scalar> = (0..5).map(|_| Scalar::zero()).collect();
        for ((c, j), s) in self.terms.iter().zip(signs) {
            coeffs[*j] = if s < 0 { -c } else { c.clone() };
        }
        coeffs[4] = -&self.x5_coeff;
        Inequality::new(coeffs, self.constant.clone()).expect("nonzero normal")
    }
}

/// A row name of the facet table with its sign pattern (none for the bases).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetLabel {
    pub letter: String,
    pub signs: Option<[i8; 4]>,
}

impl FacetLabel {
    pub fn base(letter: &str) -> Self {
        FacetLabel { letter: letter.into(), signs: None }
    }

    pub fn signed(letter: &str, signs: [i8; 4]) -> Self {
        FacetLabel { letter: letter.into(), signs: Some(signs) }
    }

    /// Parses `"A"`, `"B++-+"`, `"H'++++"`.
    pub fn parse(s: &str) -> Option<Self> {
        let split = s.find(['+', '-']).unwrap_or(s.len());
        let (letter, pattern) = s.split_at(split);
        if letter.is_empty() {
            return None;
        }
        if pattern.is_empty() {
            return Some(FacetLabel::base(letter));
        }
        if pattern.len() != 4 {
            return None;
        }
        let mut signs = [0i8; 4];
        for (i, ch) in pattern.chars().enumerate() {
            signs[i] = match ch {
                '+' => 1,
                '-' => -1,
                _ => return None,
            };
        }
        Some(FacetLabel::signed(letter, signs))
    }

    /// The orbit name under the plus-base stabilizer: the letter without
    /// its prime.
    pub fn family(&self) -> &str {
        self.letter.trim_end_matches('\'')
    }
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter)?;
        if let Some(signs) = self.signs {
            for s in signs {
                write!(f, "{}", if s < 0 { '-' } else { '+' })?;
            }
        }
        Ok(())
    }
}

fn form(letter: &'static str, constant: Scalar, x5: Scalar, terms: [(Scalar, usize); 4]) -> FacetForm {
    FacetForm { letter, constant, x5_coeff: x5, terms }
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn z(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// The 20 signed forms, B through K with primed variants, in table order.
pub fn facet_forms() -> Vec<FacetForm> {
    let (x1, x2, x3, x4) = (0, 1, 2, 3);
    alloc::vec![
        form("B", q(315, 2), q(-135, 2), [(z(5), x1), (z(1), x2), (z(2), x3), (z(1), x4)]),
        form("B'", q(315, 2), q(-135, 2), [(z(5), x2), (z(1), x1), (z(2), x4), (z(1), x3)]),
        form("C", z(135), z(-45), [(z(4), x1), (z(2), x2), (q(7, 4), x3), (q(5, 4), x4)]),
        form("C'", z(135), z(-45), [(z(4), x2), (z(2), x1), (q(7, 4), x4), (q(5, 4), x3)]),
        form("D", z(135), z(-45), [(z(4), x1), (z(1), x2), (z(2), x3), (z(1), x4)]),
        form("D'", z(135), z(-45), [(z(4), x2), (z(1), x1), (z(2), x4), (z(1), x3)]),
        form("E", z(105), z(-30), [(z(3), x1), (q(3, 2), x2), (q(3, 2), x3), (z(1), x4)]),
        form("E'", z(105), z(-30), [(z(3), x2), (q(3, 2), x1), (q(3, 2), x4), (z(1), x3)]),
        form("F", z(75), z(-15), [(z(2), x1), (z(1), x2), (z(1), x3), (z(1), x4)]),
        form("F'", z(75), z(-15), [(z(2), x2), (z(1), x1), (z(1), x4), (z(1), x3)]),
        form("G", z(75), z(15), [(z(2), x4), (z(1), x3), (z(1), x1), (z(1), x2)]),
        form("G'", z(75), z(15), [(z(2), x3), (z(1), x4), (z(1), x2), (z(1), x1)]),
        form("H", z(105), z(30), [(z(3), x4), (q(3, 2), x3), (q(3, 2), x1), (z(1), x2)]),
        form("H'", z(105), z(30), [(z(3), x3), (q(3, 2), x4), (q(3, 2), x2), (z(1), x1)]),
        form("I", z(135), z(45), [(z(4), x4), (z(1), x3), (z(2), x1), (z(1), x2)]),
        form("I'", z(135), z(45), [(z(4), x3), (z(1), x4), (z(2), x2), (z(1), x1)]),
        form("J", z(135), z(45), [(z(4), x4), (z(2), x3), (q(7, 4), x1), (q(5, 4), x2)]),
        form("J'", z(135), z(45), [(z(4), x3), (z(2), x4), (q(7, 4), x2), (q(5, 4), x1)]),
        form("K", q(315, 2), q(135, 2), [(z(5), x4), (z(1), x3), (z(2), x1), (z(1), x2)]),
        form("K'", q(315, 2), q(135, 2), [(z(5), x3), (z(1), x4), (z(2), x2), (z(1), x1)]),
    ]
}

/// All sixteen sign patterns, `++++` first, in binary order with `-` as 1.
pub fn sign_patterns() -> impl Iterator<Item = [i8; 4]> {
    (0..16u8).map(|m| core::array::from_fn(|i| if m & (8 >> i) != 0 { -1 } else { 1 }))
}

/// `A: 1 - x5 ≥ 0`, the base on `x5 = 1`.
pub fn facet_a() -> Inequality {
    Inequality::from_ints(&[0, 0, 0, 0, 1], 1).expect("nonzero normal")
}

/// `L: 1 + x5 ≥ 0`, the base on `x5 = -1`.
pub fn facet_l() -> Inequality {
    Inequality::from_ints(&[0, 0, 0, 0, -1], 1).expect("nonzero normal")
}

/// The 322 labeled canonical facet inequalities, expanded from the table.
pub fn expected_facets() -> Vec<(FacetLabel, Inequality)> {
    let mut out = alloc::vec![(FacetLabel::base("A"), facet_a())];
    for f in facet_forms() {
        for signs in sign_patterns() {
            out.push((FacetLabel::signed(f.letter, signs), f.inequality(signs)));
        }
    }
    out.push((FacetLabel::base("L"), facet_l()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    #[test]
    fn labels_round_trip() {
        for i in 0..48 {
            assert_eq!(vertex_index(&vertex_label(i)), Some(i));
        }
        assert_eq!(vertex_index("25+"), None);
        assert_eq!(vertex_index("x"), None);
        assert_eq!(VERTICES[vertex_index("5+").unwrap()], [0, 0, 45, 0, 1]);
        assert_eq!(VERTICES[vertex_index("17-").unwrap()], [40, 0, 10, 0, -1]);
    }

    #[test]
    fn representative_inequalities() {
        let all = expected_facets();
        assert_eq!(all.len(), 322);
        let distinct: BTreeSet<_> = all.iter().map(|(_, h)| h.clone()).collect();
        assert_eq!(distinct.len(), 322);
        let get = |s: &str| {
            let l = FacetLabel::parse(s).unwrap();
            all.iter().find(|(k, _)| *k == l).unwrap().1.clone()
        };
        assert_eq!(get("A"), Inequality::from_ints(&[0, 0, 0, 0, 1], 1).unwrap());
        assert_eq!(get("B++++"), Inequality::from_ints(&[10, 2, 4, 2, 135], 315).unwrap());
        assert_eq!(get("G'+-++"), Inequality::from_ints(&[1, 1, 2, -1, -15], 75).unwrap());
        assert_eq!(get("C++++"), Inequality::from_ints(&[16, 8, 7, 5, 180], 540).unwrap());
    }

    #[test]
    fn facet_label_parsing() {
        let l = FacetLabel::parse("H'+-++").unwrap();
        assert_eq!(l.letter, "H'");
        assert_eq!(l.signs, Some([1, -1, 1, 1]));
        assert_eq!(l.to_string(), "H'+-++");
        assert_eq!(l.family(), "H");
        assert_eq!(FacetLabel::parse("A").unwrap(), FacetLabel::base("A"));
        assert!(FacetLabel::parse("B+").is_none());
    }
}

//! The `POLY 1` and `HPOLY 1` text formats.

use std::fmt::Write as _;
use std::str::FromStr;

use hirsch_core::{FacetIncidence, HPolytope, Inequality, Point, Scalar, VPolytope};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Exact H-data as written: rows `a_1 .. a_d b` meaning `a·x <= b`
/// (inequalities) or `a·x = b` (equalities).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRows {
    pub dim: usize,
    pub inequalities: Vec<Vec<Scalar>>,
    pub equalities: Vec<Vec<Scalar>>,
    pub incidence: Option<Vec<Vec<usize>>>,
}

impl HRows {
    pub fn from_hull(h: &HPolytope, inc: Option<&FacetIncidence>) -> Self {
        let row = |q: &Inequality| {
            let mut r = q.coeffs().to_vec();
            r.push(q.offset().clone());
            r
        };
        HRows {
            dim: h.ambient_dim,
            inequalities: h.inequalities.iter().map(row).collect(),
            equalities: h.equalities.iter().map(row).collect(),
            incidence: inc.map(|i| i.rows().iter().map(|r| r.iter().collect()).collect()),
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate().peekable(), last: 0 }
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.inner.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.inner.next();
            } else {
                break;
            }
        }
    }

    fn next_line(&mut self) -> Option<&'a str> {
        self.skip_blank();
        self.inner.next().map(|(i, l)| {
            self.last = i + 1;
            l.trim()
        })
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.last, message: message.into() }
    }

    fn expect(&mut self, what: &str) -> Result<&'a str, ParseError> {
        self.next_line().ok_or_else(|| ParseError { line: self.last + 1, message: format!("expected {what}") })
    }

    fn keyword_count(&mut self, key: &str) -> Result<usize, ParseError> {
        let line = self.expect(key)?;
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [k, n] if *k == key => n.parse().map_err(|_| self.error(format!("bad count {n:?}"))),
            _ => Err(self.error(format!("expected \"{key} <n>\", found {line:?}"))),
        }
    }

    fn header(&mut self, magic: &str) -> Result<(), ParseError> {
        let line = self.expect(magic)?;
        if line.split_whitespace().collect::<Vec<_>>() != [magic, "1"] {
            return Err(self.error(format!("expected \"{magic} 1\", found {line:?}")));
        }
        Ok(())
    }

    fn row(&mut self, len: usize) -> Result<Vec<Scalar>, ParseError> {
        let line = self.expect("a row of rationals")?;
        let vals: Vec<&str> = line.split_whitespace().collect();
        if vals.len() != len {
            return Err(self.error(format!("expected {len} values, found {}", vals.len())));
        }
        vals.iter().map(|v| Scalar::from_str(v).map_err(|e| self.error(e.to_string()))).collect()
    }
}

pub fn parse_poly(text: &str) -> Result<VPolytope, ParseError> {
    let mut lines = Lines::new(text);
    lines.header("POLY")?;
    let dim = lines.keyword_count("dim")?;
    let n = lines.keyword_count("vertices")?;
    if dim == 0 || n == 0 {
        return Err(lines.error("need dim >= 1 and at least one vertex"));
    }
    let mut pts = Vec::with_capacity(n);
    for _ in 0..n {
        pts.push(Point::new(lines.row(dim)?));
    }
    let mut labels = None;
    if let Some(line) = lines.next_line() {
        if line != "labels" {
            return Err(lines.error(format!("unexpected {line:?}")));
        }
        let mut l = Vec::with_capacity(n);
        for _ in 0..n {
            l.push(lines.expect("a label")?.to_string());
        }
        labels = Some(l);
        if let Some(extra) = lines.next_line() {
            return Err(lines.error(format!("trailing data {extra:?}")));
        }
    }
    let vp = VPolytope::new(pts).map_err(|e| lines.error(e.to_string()))?;
    match labels {
        Some(l) => vp.with_labels(l).map_err(|e| lines.error(e.to_string())),
        None => Ok(vp),
    }
}

pub fn parse_hpoly(text: &str) -> Result<HRows, ParseError> {
    let mut lines = Lines::new(text);
    lines.header("HPOLY")?;
    let dim = lines.keyword_count("dim")?;
    let m = lines.keyword_count("inequalities")?;
    let inequalities = (0..m).map(|_| lines.row(dim + 1)).collect::<Result<_, _>>()?;
    let mut out = HRows { dim, inequalities, equalities: Vec::new(), incidence: None };
    while let Some(line) = lines.next_line() {
        let (key, count) = line.split_once(' ').unwrap_or((line, ""));
        let count: usize = count.trim().parse().map_err(|_| lines.error(format!("bad block header {line:?}")))?;
        match key {
            "equalities" if out.equalities.is_empty() => {
                out.equalities = (0..count).map(|_| lines.row(dim + 1)).collect::<Result<_, _>>()?;
            }
            "incidence" if out.incidence.is_none() => {
                if count != m {
                    return Err(lines.error(format!("incidence has {count} rows for {m} inequalities")));
                }
                let mut rows = Vec::with_capacity(count);
                for _ in 0..count {
                    let l = lines.expect("an incidence row")?;
                    let r: Result<Vec<usize>, _> = l.split_whitespace().map(str::parse).collect();
                    rows.push(r.map_err(|_| lines.error(format!("bad incidence row {l:?}")))?);
                }
                out.incidence = Some(rows);
            }
            _ => return Err(lines.error(format!("unexpected {line:?}"))),
        }
    }
    Ok(out)
}

fn push_row(out: &mut String, row: &[Scalar]) {
    let parts: Vec<String> = row.iter().map(Scalar::to_string).collect();
    out.push_str(&parts.join(" "));
    out.push('\n');
}

pub fn write_poly(p: &VPolytope) -> String {
    let mut out = String::new();
    let _ = write!(out, "POLY 1\ndim {}\nvertices {}\n", p.ambient_dim(), p.len());
    for v in p.vertices() {
        push_row(&mut out, v.coords());
    }
    if let Some(labels) = p.labels() {
        out.push_str("labels\n");
        for l in labels {
            out.push_str(l);
            out.push('\n');
        }
    }
    out
}

pub fn write_hpoly(h: &HRows) -> String {
    let mut out = String::new();
    let _ = write!(out, "HPOLY 1\ndim {}\ninequalities {}\n", h.dim, h.inequalities.len());
    for r in &h.inequalities {
        push_row(&mut out, r);
    }
    if !h.equalities.is_empty() {
        let _ = writeln!(out, "equalities {}", h.equalities.len());
        for r in &h.equalities {
            push_row(&mut out, r);
        }
    }
    if let Some(inc) = &h.incidence {
        let _ = writeln!(out, "incidence {}", inc.len());
        for r in inc {
            let parts: Vec<String> = r.iter().map(usize::to_string).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let text = "POLY 1\ndim 2\nvertices 3\n0 0\n315/2 -45\n1 1/3\nlabels\na\nb\nc\n";
        let p = parse_poly(text).unwrap();
        assert_eq!(p.vertices()[1].coords()[0], Scalar::ratio(315, 2));
        assert_eq!(write_poly(&p), text);
    }

    #[test]
    fn hpoly_round_trip() {
        let text = "HPOLY 1\ndim 2\ninequalities 2\n1 0 1\n-1/2 0 0\nequalities 1\n0 1 0\nincidence 2\n0 1\n2\n";
        let h = parse_hpoly(text).unwrap();
        assert_eq!(h.incidence.as_ref().unwrap()[1], [2]);
        assert_eq!(write_hpoly(&h), text);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_poly("POLY 1\ndim 2\nvertices 2\n0 0\n1 x\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert!(parse_poly("POLY 2\n").is_err());
        assert!(parse_poly("POLY 1\ndim 2\nvertices 2\n0 0\n1 1 1\n").is_err());
        assert!(parse_poly("POLY 1\ndim 1\nvertices 1\n0\nextra\n").is_err());
        assert!(parse_hpoly("HPOLY 1\ndim 1\ninequalities 1\n1 1/0\n").is_err());
    }
}

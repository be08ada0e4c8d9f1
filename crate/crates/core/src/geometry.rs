//! Points, inequalities, signed-permutation maps and affine predicates.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{self, homogenize, int_rank, to_primitive_integers};
use crate::scalar::Scalar;

/// A point of rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point((0..dim).map(|_| Scalar::zero()).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Point {
        Point(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        linalg::dot(&self.0, &other.0)
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: Scalar) -> Point {
        let mut c = self.0.clone();
        c.push(last);
        Point(c)
    }

    /// Drops the last coordinate.
    pub fn truncated(&self) -> Point {
        Point(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

impl Index<usize> for Point {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `coeffs · x ≤ offset`, kept in canonical form: coprime integer entries,
/// scaled by a positive factor only so the direction is preserved.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    coeffs: Vec<Scalar>,
    offset: Scalar,
}

impl Inequality {
    pub fn new(coeffs: Vec<Scalar>, offset: Scalar) -> Result<Self> {
        if coeffs.iter().all(Scalar::is_zero) {
            return Err(Error::ZeroNormal);
        }
        let mut all = coeffs;
        all.push(offset);
        let ints = to_primitive_integers(&all);
        let mut coeffs: Vec<Scalar> = ints.into_iter().map(Scalar::from_bigint).collect();
        let offset = coeffs.pop().expect("nonempty");
        Ok(Inequality { coeffs, offset })
    }

    pub fn from_ints(coeffs: &[i64], offset: i64) -> Result<Self> {
        Inequality::new(coeffs.iter().map(|&x| Scalar::from_int(x)).collect(), Scalar::from_int(offset))
    }

    pub(crate) fn from_primitive_unchecked(coeffs: Vec<Scalar>, offset: Scalar) -> Self {
        Inequality { coeffs, offset }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// The same hyperplane with the opposite half-space.
    pub fn flipped(&self) -> Inequality {
        Inequality { coeffs: self.coeffs.iter().map(|c| -c).collect(), offset: -&self.offset }
    }

    /// Orientation with the first nonzero coefficient positive.
    pub fn normalized_hyperplane(self) -> Inequality {
        let first = self.coeffs.iter().find(|c| !c.is_zero()).expect("nonzero");
        if first.is_negative() {
            self.flipped()
        } else {
            self
        }
    }

    /// `offset - coeffs · p`.
    pub fn slack(&self, p: &Point) -> Scalar {
        &self.offset - linalg::dot(&self.coeffs, p.coords())
    }

    pub fn normal(&self) -> Point {
        Point::new(self.coeffs.clone())
    }
}

impl fmt::Debug for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " | {})", self.offset)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs != Scalar::one() {
                write!(f, "{abs}")?;
            }
            write!(f, "x{}", i + 1)?;
            first = false;
        }
        write!(f, " <= {}", self.offset)
    }
}

/// Result of evaluating an inequality at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    /// Sign of `offset - coeffs · p`: +1 strict, 0 tight, -1 violated.
    pub sign: i32,
    pub slack: Scalar,
}

pub fn evaluate(ineq: &Inequality, p: &Point) -> Result<Evaluation> {
    if ineq.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: ineq.dim(), found: p.dim() });
    }
    let slack = ineq.slack(p);
    Ok(Evaluation { sign: slack.signum(), slack })
}

fn check_dims(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let d = first.dim();
    if d == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
    }
    Ok(d)
}

/// Dimension of the affine hull of a nonempty point list.
pub fn affine_rank(points: &[Point]) -> Result<usize> {
    check_dims(points)?;
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| homogenize(p.coords())).collect();
    Ok(int_rank(&rows) - 1)
}

/// Affine rank of pre-homogenized rows; 0 rows gives `None`.
pub(crate) fn affine_rank_hom(rows: &[Vec<BigInt>]) -> Option<usize> {
    if rows.is_empty() {
        None
    } else {
        Some(int_rank(rows) - 1)
    }
}

/// The hyperplane spanned by points whose affine rank is one less than the
/// ambient dimension, oriented with its first nonzero coefficient positive.
pub fn hyperplane_through(points: &[Point]) -> Result<Inequality> {
    let d = check_dims(points)?;
    let r = affine_rank(points)?;
    if r + 1 != d {
        return Err(Error::RankMismatch { expected: d - 1, found: r });
    }
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let mut row = p.coords().to_vec();
            row.push(Scalar::one());
            row
        })
        .collect();
    let mut ns = linalg::nullspace(&rows, d + 1);
    debug_assert_eq!(ns.len(), 1);
    let mut v = ns.pop().expect("one-dimensional nullspace");
    let c = v.pop().expect("nonempty");
    Ok(Inequality::new(v, -c)?.normalized_hyperplane())
}

/// An orthogonal map with entries in {-1, 0, 1}, i.e. a signed permutation
/// matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthMap {
    // row i has its single nonzero entry at column src[i] with sign sign[i]
    src: Vec<usize>,
    sign: Vec<i8>,
}

impl OrthMap {
    pub fn identity(dim: usize) -> Self {
        OrthMap { src: (0..dim).collect(), sign: alloc::vec![1; dim] }
    }

    /// Builds the map from a dense matrix, rejecting anything that is not
    /// orthogonal with entries in {-1, 0, 1}.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut src = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        let mut col_used = alloc::vec![false; n];
        for row in rows {
            if row.len() != n {
                return Err(Error::NotOrthogonal);
            }
            let nz: Vec<(usize, i64)> = row.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
            match nz.as_slice() {
                [(j, x)] if (*x == 1 || *x == -1) && !col_used[*j] => {
                    col_used[*j] = true;
                    src.push(*j);
                    sign.push(*x as i8);
                }
                _ => return Err(Error::NotOrthogonal),
            }
        }
        Ok(OrthMap { src, sign })
    }

    /// Output coordinate `i` is `sign_i · x_{src_i}`.
    pub fn from_images(images: &[(usize, i8)]) -> Result<Self> {
        let n = images.len();
        let rows: Vec<Vec<i64>> = images
            .iter()
            .map(|&(j, s)| {
                let mut r = alloc::vec![0; n];
                if j < n {
                    r[j] = s as i64;
                }
                r
            })
            .collect();
        OrthMap::from_rows(&rows)
    }

    pub fn dim(&self) -> usize {
        self.src.len()
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut r = alloc::vec![0; n];
                r[self.src[i]] = self.sign[i] as i64;
                r
            })
            .collect()
    }

    /// Matrix product `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &OrthMap) -> OrthMap {
        let src = self.src.iter().map(|&j| other.src[j]).collect();
        let sign = self.src.iter().zip(&self.sign).map(|(&j, &s)| s * other.sign[j]).collect();
        OrthMap { src, sign }
    }

    pub fn transpose(&self) -> OrthMap {
        let n = self.dim();
        let mut src = alloc::vec![0; n];
        let mut sign = alloc::vec![0; n];
        for i in 0..n {
            src[self.src[i]] = i;
            sign[self.src[i]] = self.sign[i];
        }
        OrthMap { src, sign }
    }

    pub fn is_identity(&self) -> bool {
        self.src.iter().enumerate().all(|(i, &j)| i == j) && self.sign.iter().all(|&s| s == 1)
    }

    fn map_coords(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.src.iter().zip(&self.sign).map(|(&j, &s)| if s < 0 { -&c[j] } else { c[j].clone() }).collect()
    }
}

impl fmt::Debug for OrthMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (&j, &s)) in self.src.iter().zip(&self.sign).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}x{}", if s < 0 { "-" } else { "" }, j + 1)?;
        }
        write!(f, ")")
    }
}

pub fn apply_map(m: &OrthMap, p: &Point) -> Result<Point> {
    if m.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: p.dim() });
    }
    Ok(Point::new(m.map_coords(p.coords())))
}

/// Image of the half-space under `m`; orthogonality means the normal is
/// mapped by `m` itself.
pub fn apply_map_ineq(m: &OrthMap, ineq: &Inequality) -> Result<Inequality> {
    if m.dim() != ineq.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: ineq.dim() });
    }
    // signed permutations keep primitive integer vectors primitive
    Ok(Inequality::from_primitive_unchecked(m.map_coords(ineq.coeffs()), ineq.offset().clone()))
}

/// Formats a list of rationals separated by single spaces.
pub fn format_row(values: &[Scalar]) -> alloc::string::String {
    let parts: Vec<_> = values.iter().map(|v| v.to_string()).collect();
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_ints(r)).collect()
    }

    fn b_plus() -> Inequality {
        Inequality::from_ints(&[10, 2, 4, 2, 135], 315).unwrap()
    }

    // vertices 1+ 5+ 9+ 13+ 17+ 21+ 5- of the 48-vertex prismatoid
    fn b_plus_vertices() -> Vec<Point> {
        pts(&[
            &[18, 0, 0, 0, 1],
            &[0, 0, 45, 0, 1],
            &[15, 15, 0, 0, 1],
            &[0, 0, 30, 30, 1],
            &[0, 10, 40, 0, 1],
            &[10, 0, 0, 40, 1],
            &[45, 0, 0, 0, -1],
        ])
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])).unwrap(), 2);
        assert_eq!(affine_rank(&pts(&[&[3, 4]])).unwrap(), 0);
        assert_eq!(affine_rank(&b_plus_vertices()[..6]).unwrap(), 3);
        assert_eq!(affine_rank(&b_plus_vertices()).unwrap(), 4);
    }

    #[test]
    fn affine_rank_errors() {
        assert_eq!(affine_rank(&[]), Err(Error::EmptyInput));
        assert!(matches!(affine_rank(&pts(&[&[0, 0], &[1, 0, 0]])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn hyperplane_examples() {
        let h = hyperplane_through(&pts(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(h, Inequality::from_ints(&[1, 1], 1).unwrap());
        assert_eq!(hyperplane_through(&b_plus_vertices()).unwrap(), b_plus());
        let q_plus =
            pts(&[&[18, 0, 0, 0], &[0, 0, 45, 0], &[15, 15, 0, 0], &[0, 0, 30, 30], &[0, 10, 40, 0], &[10, 0, 0, 40]]);
        assert_eq!(hyperplane_through(&q_plus).unwrap(), Inequality::from_ints(&[5, 1, 2, 1], 90).unwrap());
    }

    #[test]
    fn hyperplane_rank_errors() {
        let too_low = pts(&[&[1, 0, 0], &[2, 0, 0]]);
        assert!(matches!(hyperplane_through(&too_low), Err(Error::RankMismatch { .. })));
        let too_high = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(hyperplane_through(&too_high), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn canonical_form_clears_fractions() {
        // 315/2 - 135/2 x5 >= 5x1 + x2 + 2x3 + x4
        let raw = Inequality::new(
            [5, 1, 2, 1].iter().map(|&x| Scalar::from_int(x)).chain([Scalar::ratio(135, 2)]).collect(),
            Scalar::ratio(315, 2),
        )
        .unwrap();
        assert_eq!(raw, b_plus());
        assert_eq!(Inequality::from_ints(&[0, 0], 1), Err(Error::ZeroNormal));
    }

    #[test]
    fn evaluate_examples() {
        let x_le_2 = Inequality::from_ints(&[1], 2).unwrap();
        assert_eq!(evaluate(&x_le_2, &Point::from_ints(&[2])).unwrap().sign, 0);
        let e = evaluate(&b_plus(), &Point::from_ints(&[0, 18, 0, 0, 1])).unwrap();
        assert_eq!(e.sign, 1);
        assert_eq!(e.slack, Scalar::from_int(315 - 36 - 135));
        let e = evaluate(&b_plus(), &Point::from_ints(&[45, 0, 0, 0, -1])).unwrap();
        assert_eq!(e.sign, 0);
        assert!(evaluate(&b_plus(), &Point::from_ints(&[1])).is_err());
    }

    #[test]
    fn orth_map_validation() {
        assert!(OrthMap::from_rows(&[alloc::vec![1, 1], alloc::vec![0, 1]]).is_err());
        assert!(OrthMap::from_rows(&[alloc::vec![2, 0], alloc::vec![0, 1]]).is_err());
        assert!(OrthMap::from_rows(&[alloc::vec![0, 1], alloc::vec![0, -1]]).is_err());
        let m = OrthMap::from_rows(&[alloc::vec![0, -1], alloc::vec![1, 0]]).unwrap();
        assert_eq!(m.matrix(), [alloc::vec![0, -1], alloc::vec![1, 0]]);
        assert!(m.compose(&m.transpose()).is_identity());
    }

    #[test]
    fn identity_map_fixes_points() {
        let p = Point::from_ints(&[3, -1, 7]);
        assert_eq!(apply_map(&OrthMap::identity(3), &p).unwrap(), p);
    }

    #[test]
    fn base_swap_sends_one_plus_to_one_minus() {
        // y = (x3, x4, x2, x1, -x5)
        let m = OrthMap::from_images(&[(2, 1), (3, 1), (1, 1), (0, 1), (4, -1)]).unwrap();
        let img = apply_map(&m, &Point::from_ints(&[18, 0, 0, 0, 1])).unwrap();
        assert_eq!(img, Point::from_ints(&[0, 0, 0, 18, -1]));
    }

    #[test]
    fn map_inequality_keeps_incidence() {
        let m = OrthMap::from_images(&[(0, -1), (1, 1), (2, 1), (3, 1), (4, 1)]).unwrap();
        let img = apply_map_ineq(&m, &b_plus()).unwrap();
        assert_eq!(img, Inequality::from_ints(&[-10, 2, 4, 2, 135], 315).unwrap());
        for v in b_plus_vertices() {
            let w = apply_map(&m, &v).unwrap();
            assert_eq!(evaluate(&img, &w).unwrap().sign, 0);
        }
    }

    fn arb_map(n: usize) -> impl Strategy<Value = OrthMap> {
        (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(
            |(perm, signs)| {
                let images: Vec<(usize, i8)> =
                    perm.into_iter().zip(signs).map(|(j, s)| (j, if s { 1 } else { -1 })).collect();
                OrthMap::from_images(&images).unwrap()
            },
        )
    }

    fn arb_points(n: usize) -> impl Strategy<Value = Vec<Point>> {
        proptest::collection::vec(proptest::collection::vec(-5i64..6, n), 1..7)
            .prop_map(|rows| rows.iter().map(|r| Point::from_ints(r)).collect())
    }

    proptest! {
        #[test]
        fn composition_law(m1 in arb_map(4), m2 in arb_map(4), p in proptest::collection::vec(-9i64..10, 4)) {
            let p = Point::from_ints(&p);
            let lhs = apply_map(&m2, &apply_map(&m1, &p).unwrap()).unwrap();
            let rhs = apply_map(&m2.compose(&m1), &p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonicalize_is_scale_invariant(
            c in proptest::collection::vec(-9i64..10, 3), b in -9i64..10, num in 1i64..50, den in 1i64..50
        ) {
            prop_assume!(c.iter().any(|&x| x != 0));
            let base = Inequality::from_ints(&c, b).unwrap();
            let k = Scalar::ratio(num, den);
            let scaled = Inequality::new(base.coeffs().iter().map(|x| x * &k).collect(), base.offset() * &k).unwrap();
            prop_assert_eq!(&scaled, &base);
            let again = Inequality::new(base.coeffs().to_vec(), base.offset().clone()).unwrap();
            prop_assert_eq!(again, base);
        }

        #[test]
        fn affine_rank_invariance(points in arb_points(4), m in arb_map(4), seed in any::<u64>()) {
            let r = affine_rank(&points).unwrap();
            let mapped: Vec<Point> = points.iter().map(|p| apply_map(&m, p).unwrap()).collect();
            prop_assert_eq!(affine_rank(&mapped).unwrap(), r);
            let mut shuffled = points.clone();
            let k = (seed as usize) % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            prop_assert_eq!(affine_rank(&shuffled).unwrap(), r);
        }

        #[test]
        fn hyperplane_contains_inputs(points in proptest::collection::vec(proptest::collection::vec(-5i64..6, 3), 3..5)) {
            let points: Vec<Point> = points.iter().map(|r| Point::from_ints(r)).collect();
            prop_assume!(affine_rank(&points).unwrap() == 2);
            let h = hyperplane_through(&points).unwrap();
            for p in &points {
                prop_assert_eq!(evaluate(&h, p).unwrap().sign, 0);
            }
        }
    }
}

//! Hirsch excess and the parameters of the product-and-blend families.

use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessReport {
    pub dim: u64,
    pub facets: u64,
    pub diameter: u64,
    /// `l / (n - d) - 1`.
    pub excess: Scalar,
}

impl ExcessReport {
    pub fn is_hirsch(&self) -> bool {
        !self.excess.is_positive()
    }
}

impl fmt::Display for ExcessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.excess, if self.is_hirsch() { "HIRSCH" } else { "NON-HIRSCH" })
    }
}

fn int(x: u64) -> Scalar {
    Scalar::from_int(x as i64)
}

pub fn hirsch_excess(d: u64, n: u64, l: u64) -> Result<ExcessReport> {
    if d < 1 || n <= d {
        return Err(Error::Precondition("need n > d >= 1".into()));
    }
    let excess = int(l) / int(n - d) - Scalar::one();
    Ok(ExcessReport { dim: d, facets: n, diameter: l, excess })
}

/// Diameter at most `n - d`.
pub fn is_hirsch(d: u64, n: u64, l: u64) -> Result<bool> {
    Ok(hirsch_excess(d, n, l)?.is_hirsch())
}

/// Blend of `j` copies of the `k`-th power of a non-Hirsch `(d, n, l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParameters {
    pub dim: u64,
    pub facets: u64,
    pub diameter_lower_bound: u64,
    /// `ε - (j-1)/(jk(n-d))`, with `ε` the excess of the input.
    pub excess_lower_bound: Scalar,
    /// `ε - 1/(k(n-d))`, the value as `j` grows.
    pub limit_excess: Scalar,
    /// `(1 - 1/k) ε`.
    pub power_bound: Scalar,
    /// `(1 - 1/(bk)) ε` with `b = l - n + d`.
    pub refined_bound: Scalar,
}

pub fn family_parameters(d: u64, n: u64, l: u64, k: u64, j: u64) -> Result<FamilyParameters> {
    let base = hirsch_excess(d, n, l)?;
    if base.is_hirsch() {
        return Err(Error::Precondition("input satisfies the Hirsch bound".into()));
    }
    if k == 0 || j == 0 {
        return Err(Error::Precondition("need k, j >= 1".into()));
    }
    let eps = base.excess;
    let m = n - d;
    let b = l - m;
    let one = Scalar::one();
    Ok(FamilyParameters {
        dim: k * d,
        facets: j * (k * n - k * d) + k * d,
        diameter_lower_bound: j * (k * l - 1) + 1,
        excess_lower_bound: &eps - &(int(j - 1) / int(j * k * m)),
        limit_excess: &eps - &(one.clone() / int(k * m)),
        power_bound: (&one - &(one.clone() / int(k))) * &eps,
        refined_bound: (&one - &(one.clone() / int(b * k))) * &eps,
    })
}

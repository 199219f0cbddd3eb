use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Per-position bounds for the determinant entries of the bounded
/// identities.
///
/// Entry `(i, j)` of `det(f_(lambda_i - i + j))` is the factor `f_(mu_j)` of
/// a composition `mu` whose `j`-th coordinate ranges over `[0, a_j]`, so the
/// bound that applies to an entry is the one of its column. For a constant
/// bound rows and columns coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    bounds: Vec<Option<u32>>,
}

impl Window {
    pub fn unbounded(n: usize) -> Self {
        Window {
            bounds: vec![None; n],
        }
    }

    pub fn bounded(a: &[u32]) -> Self {
        Window {
            bounds: a.iter().map(|&b| Some(b)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn bound(&self, col: usize) -> Option<u32> {
        self.bounds[col]
    }

    /// Whether subscript `k` survives in column `col`.
    pub fn admits(&self, col: usize, k: i64) -> bool {
        k >= 0 && self.bounds[col].is_none_or(|b| k <= b as i64)
    }
}

/// How the `t` variables of the power determinant are specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TMode {
    /// Independent `t1..tn`.
    Distinct,
    /// A single `t` in every column.
    Repeated,
    /// Every `t_j = 1`; the determinant becomes the 0/1 matrix `c(lambda, a)`.
    Ones,
}

impl fmt::Display for TMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TMode::Distinct => "distinct",
            TMode::Repeated => "repeated",
            TMode::Ones => "ones",
        })
    }
}

impl FromStr for TMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distinct" => Ok(TMode::Distinct),
            "repeated" => Ok(TMode::Repeated),
            "ones" => Ok(TMode::Ones),
            other => Err(Error::InvalidParameter(format!("unknown t-mode `{other}`"))),
        }
    }
}

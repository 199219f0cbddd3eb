use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::lemmas::{lemma1_case, lemma2_brute_force};
use super::sides::*;
use super::window::{TMode, Window};
use crate::partitions::{compositions_in_box, enum_bounded, Partition};
use crate::poly::{Poly, VarContext};
use crate::symfunc::{Family, FamilyKind};
use crate::{Error, Result};

pub const MAX_N: usize = 4;
pub const MAX_M: usize = 4;
pub const MAX_DEGREE: u32 = 10;
pub const MAX_BOUND: u32 = 10;
pub const MAX_BOX: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Thm1Family,
    Thm1T,
    BoundedFamily,
    BoundedT,
    Macdonald,
    CauchyH,
    CauchyDualE,
    Lemma1,
    Lemma2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Thm1Family,
        IdentityId::Thm1T,
        IdentityId::BoundedFamily,
        IdentityId::BoundedT,
        IdentityId::Macdonald,
        IdentityId::CauchyH,
        IdentityId::CauchyDualE,
        IdentityId::Lemma1,
        IdentityId::Lemma2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Thm1Family => "thm1_family",
            IdentityId::Thm1T => "thm1_t",
            IdentityId::BoundedFamily => "bounded_family",
            IdentityId::BoundedT => "bounded_t",
            IdentityId::Macdonald => "macdonald",
            IdentityId::CauchyH => "cauchy_h",
            IdentityId::CauchyDualE => "cauchy_dual_e",
            IdentityId::Lemma1 => "lemma1",
            IdentityId::Lemma2 => "lemma2",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity `{s}`")))
    }
}

/// Parameters of one verification run. Fields an identity does not use are
/// ignored by it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    pub degree: u32,
    /// Per-row bounds; a single entry is repeated `n` times.
    pub bounds: Option<Vec<u32>>,
    pub family: FamilyKind,
    /// `f_0, f_1, ...` in polynomial text form, for `FamilyKind::Custom`.
    /// Members past the end are zero.
    pub custom_family: Option<Vec<String>>,
    pub t_mode: TMode,
    /// Single partition for `lemma2`; all `lambda_1 <= 3` when absent.
    pub shape: Option<Vec<u32>>,
    /// Box `{0..box_max}^n` for `lemma1`.
    pub box_max: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n: 2,
            m: 2,
            degree: 4,
            bounds: None,
            family: FamilyKind::Complete,
            custom_family: None,
            t_mode: TMode::Distinct,
            shape: None,
            box_max: 4,
        }
    }
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}

impl Params {
    /// Rejects anything outside the desk-scale limits.
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_N).contains(&self.n) {
            return invalid(format!("n must be in 1..={MAX_N}"));
        }
        if !(1..=MAX_M).contains(&self.m) {
            return invalid(format!("m must be in 1..={MAX_M}"));
        }
        if self.degree > MAX_DEGREE {
            return invalid(format!("degree must be at most {MAX_DEGREE}"));
        }
        if self.box_max > MAX_BOX {
            return invalid(format!("box-max must be at most {MAX_BOX}"));
        }
        if let Some(b) = &self.bounds {
            if b.iter().any(|&a| a > MAX_BOUND) {
                return invalid(format!("bounds must be at most {MAX_BOUND}"));
            }
        }
        Ok(())
    }

    /// The bound vector of length `n`, weakly decreasing.
    pub fn resolved_bounds(&self) -> Result<Vec<u32>> {
        let Some(b) = &self.bounds else {
            return invalid("this identity needs --bounds");
        };
        let b = match b.len() {
            1 => vec![b[0]; self.n],
            len if len == self.n => b.clone(),
            len => return invalid(format!("bounds has {len} entries, expected {}", self.n)),
        };
        if b.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("bounds {b:?} must be weakly decreasing"));
        }
        Ok(b)
    }
}

/// The family named by `params`, built over `ctx`.
pub fn build_family(params: &Params, ctx: &Arc<VarContext>) -> Result<Family> {
    match params.family {
        FamilyKind::Custom => {
            let Some(lines) = &params.custom_family else {
                return invalid("custom family needs member polynomials");
            };
            let members = lines
                .iter()
                .map(|l| Poly::parse(ctx, l))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Family::custom(ctx, members, true)
        }
        kind => Family::new(kind, ctx),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Which sub-case failed, for identities checked case by case.
    pub case: Option<String>,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: Params,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub lhs_terms: usize,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }
}

fn compare(lhs: &Poly, rhs: &Poly, case: Option<String>) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(m, l, r)| Witness {
        case,
        monomial: lhs.format_monomial(&m),
        lhs: l.to_string(),
        rhs: r.to_string(),
    })
}

/// Builds both sides of `id` and compares them exactly.
pub fn verify(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    params.validate()?;
    let start = Instant::now();
    let (n, m, d) = (params.n, params.m, params.degree);
    let (witness, lhs_terms) = match id {
        IdentityId::Thm1Family => {
            let fam = build_family(params, &family_context(n, m))?;
            let lhs = lhs_unbounded_family(&fam, d)?;
            let rhs = rhs_unbounded_family(&fam, d)?;
            (compare(&lhs, &rhs, None), lhs.num_terms())
        }
        IdentityId::Thm1T => {
            let ctx = t_context(n, params.t_mode);
            let (left, right, terms) = unbounded_t_cleared_sides(&ctx, params.t_mode, d)?;
            (compare(&left, &right, None), terms)
        }
        IdentityId::BoundedFamily => {
            let a = params.resolved_bounds()?;
            let fam = build_family(params, &family_context(n, m))?;
            let lhs = lhs_bounded_family(&fam, &a)?;
            let rhs = rhs_bounded_family(&fam, &a)?;
            (compare(&lhs, &rhs, None), lhs.num_terms())
        }
        IdentityId::BoundedT => {
            let a = params.resolved_bounds()?;
            let ctx = t_context(n, params.t_mode);
            let lhs = lhs_bounded_t(&ctx, &a, params.t_mode)?;
            let rhs = rhs_bounded_t(&ctx, &a, params.t_mode)?;
            (compare(&lhs, &rhs, None), lhs.num_terms())
        }
        IdentityId::Macdonald => {
            let a = params.resolved_bounds()?;
            if a.iter().any(|&b| b != a[0]) {
                return invalid("macdonald needs a constant bound");
            }
            let lhs = bounded_schur_sum(n, a[0])?;
            let rhs = macdonald_rhs(n, a[0])?;
            (compare(&lhs, &rhs, None), lhs.num_terms())
        }
        IdentityId::CauchyH | IdentityId::CauchyDualE => {
            let dual = id == IdentityId::CauchyDualE;
            let ctx = cauchy_context(n, m);
            let lhs = cauchy_lhs(&ctx, d, dual)?;
            let rhs = cauchy_rhs(&ctx, d, dual)?;
            (compare(&lhs, &rhs, None), lhs.num_terms())
        }
        IdentityId::Lemma1 => {
            let ctx = VarContext::x_only(n);
            let mut witness = None;
            let mut terms = 0;
            for mu in compositions_in_box(&vec![params.box_max; n]) {
                let (via_sort, direct) = lemma1_case(&mu, &ctx)?;
                terms += via_sort.num_terms();
                if witness.is_none() {
                    witness = compare(&via_sort, &direct, Some(format!("mu={mu}")));
                }
            }
            (witness, terms)
        }
        IdentityId::Lemma2 => {
            let fam = build_family(params, &family_context(n, m))?;
            let shapes: Vec<Partition> = match &params.shape {
                Some(parts) => vec![Partition::new(parts.clone())?.with_ambient(n)?],
                None => enum_bounded(&vec![3; n])?.collect(),
            };
            let mut witness = None;
            let mut terms = 0;
            for lambda in shapes {
                let brute = lemma2_brute_force(&lambda, &fam)?;
                let det = family_det(&lambda, &fam, &Window::unbounded(n))?;
                terms += brute.num_terms();
                if witness.is_none() {
                    witness = compare(&brute, &det, Some(format!("lambda={lambda}")));
                }
            }
            (witness, terms)
        }
    };
    Ok(IdentityReport {
        identity: id,
        params: params.clone(),
        verdict: if witness.is_none() {
            Verdict::Equal
        } else {
            Verdict::Mismatch
        },
        witness,
        lhs_terms,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!("thm2".parse::<IdentityId>().is_err());
    }

    #[test]
    fn guardrails() {
        let p = Params {
            n: 5,
            ..Params::default()
        };
        assert!(verify(IdentityId::CauchyH, &p).is_err());
        let p = Params {
            degree: 11,
            ..Params::default()
        };
        assert!(verify(IdentityId::CauchyH, &p).is_err());
        let p = Params {
            bounds: Some(vec![11, 1]),
            ..Params::default()
        };
        assert!(verify(IdentityId::BoundedT, &p).is_err());
        let p = Params {
            bounds: Some(vec![1, 2]),
            ..Params::default()
        };
        assert!(verify(IdentityId::BoundedT, &p).is_err());
        let p = Params {
            bounds: None,
            ..Params::default()
        };
        assert!(verify(IdentityId::Macdonald, &p).is_err());
    }

    #[test]
    fn bound_broadcast() {
        let p = Params {
            n: 3,
            bounds: Some(vec![2]),
            ..Params::default()
        };
        assert_eq!(p.resolved_bounds().unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn small_runs_are_equal() {
        let p = Params {
            n: 2,
            m: 2,
            degree: 3,
            ..Params::default()
        };
        for id in [
            IdentityId::CauchyH,
            IdentityId::CauchyDualE,
            IdentityId::Thm1Family,
            IdentityId::Thm1T,
        ] {
            let r = verify(id, &p).unwrap();
            assert!(r.is_equal(), "{id}: {:?}", r.witness);
        }
    }
}

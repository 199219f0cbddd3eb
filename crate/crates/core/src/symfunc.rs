//! Classical symmetric polynomials, coefficient families and Schur
//! polynomials.
//!
//! All generators work inside a caller-supplied context on the variables of
//! one [`Bank`], so the same code produces `s_lambda(x)` and `s_lambda(y)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use itertools::Itertools;
use num_bigint::BigInt;

use crate::partitions::{normalize, Composition, Normalization, Partition};
use crate::poly::{Bank, Monomial, Poly, PolyMatrix, VarContext};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Complete,
    Elementary,
    PowerSum,
}

/// Exponent vectors of length `parts` summing to `total`.
fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn bank_monomial(ctx: &VarContext, slots: &[usize], exps: &[u32]) -> Monomial {
    let mut full = vec![0; ctx.len()];
    for (&s, &e) in slots.iter().zip(exps) {
        full[s] = e;
    }
    Monomial::from_exponents(full)
}

/// `h_k`, `e_k` or `p_k` in the variables of `bank`. Negative `k` gives 0,
/// `h_0 = e_0 = 1` and `p_0` is the number of variables.
pub fn gen(kind: GenKind, k: i64, ctx: &Arc<VarContext>, bank: Bank) -> Poly {
    if k < 0 {
        return Poly::zero(ctx);
    }
    let k = k as u32;
    let slots = ctx.bank_slots(bank);
    let m = slots.len();
    let one = BigInt::from(1);
    match kind {
        GenKind::Complete => Poly::from_terms(
            ctx,
            weak_compositions(k, m)
                .into_iter()
                .map(|e| (bank_monomial(ctx, &slots, &e), one.clone())),
        ),
        GenKind::Elementary => Poly::from_terms(
            ctx,
            (0..m).combinations(k as usize).map(|subset| {
                let mut e = vec![0; m];
                subset.into_iter().for_each(|i| e[i] = 1);
                (bank_monomial(ctx, &slots, &e), one.clone())
            }),
        ),
        GenKind::PowerSum if k == 0 => Poly::constant(ctx, m as i64),
        GenKind::PowerSum => Poly::from_terms(
            ctx,
            slots
                .iter()
                .map(|&s| (Monomial::var(ctx.len(), s, k), one.clone())),
        ),
    }
}

pub fn complete(k: i64, ctx: &Arc<VarContext>, bank: Bank) -> Poly {
    gen(GenKind::Complete, k, ctx, bank)
}

pub fn elementary(k: i64, ctx: &Arc<VarContext>, bank: Bank) -> Poly {
    gen(GenKind::Elementary, k, ctx, bank)
}

pub fn power_sum(k: i64, ctx: &Arc<VarContext>, bank: Bank) -> Poly {
    gen(GenKind::PowerSum, k, ctx, bank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FamilyKind {
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "e+h")]
    ElementaryPlusComplete,
    #[serde(rename = "custom")]
    Custom,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Complete => "h",
            FamilyKind::Elementary => "e",
            FamilyKind::PowerSum => "p",
            FamilyKind::ElementaryPlusComplete => "e+h",
            FamilyKind::Custom => "custom",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "h" => FamilyKind::Complete,
            "e" => FamilyKind::Elementary,
            "p" => FamilyKind::PowerSum,
            "e+h" | "e_plus_h" => FamilyKind::ElementaryPlusComplete,
            "custom" => FamilyKind::Custom,
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }
}

/// A sequence `f_0, f_1, ...` of polynomials in the `y` variables, with
/// `f_i = 0` for `i < 0`. Members are cached after first use.
pub struct Family {
    kind: FamilyKind,
    ctx: Arc<VarContext>,
    custom: Vec<Poly>,
    zero_tail: bool,
    cache: RwLock<HashMap<i64, Poly>>,
}

impl Clone for Family {
    fn clone(&self) -> Self {
        Family {
            kind: self.kind,
            ctx: self.ctx.clone(),
            custom: self.custom.clone(),
            zero_tail: self.zero_tail,
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Family")
            .field("kind", &self.kind)
            .field("m", &self.m())
            .field("custom", &self.custom)
            .finish()
    }
}

impl Family {
    /// One of the built-in families on the `y` variables of `ctx`.
    pub fn new(kind: FamilyKind, ctx: &Arc<VarContext>) -> Result<Self> {
        if kind == FamilyKind::Custom {
            return Err(Error::InvalidParameter(
                "custom families are built with Family::custom".into(),
            ));
        }
        Ok(Family {
            kind,
            ctx: ctx.clone(),
            custom: Vec::new(),
            zero_tail: false,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Explicit list `f_0..f_{len-1}`. With `zero_tail` every later member is
    /// zero (a finitely supported family); otherwise asking for one is an
    /// error. Members may only involve `y` variables.
    pub fn custom(ctx: &Arc<VarContext>, members: Vec<Poly>, zero_tail: bool) -> Result<Self> {
        for f in &members {
            if !Arc::ptr_eq(f.context(), ctx) && **f.context() != **ctx {
                return Err(crate::PolyError::ContextMismatch.into());
            }
            for (slot, var) in ctx.vars().iter().enumerate() {
                if var.bank != Bank::Y && f.mentions(slot) {
                    return Err(Error::FamilyVariable(var.to_string()));
                }
            }
        }
        Ok(Family {
            kind: FamilyKind::Custom,
            ctx: ctx.clone(),
            custom: members,
            zero_tail,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    /// Number of `y` variables.
    pub fn m(&self) -> usize {
        self.ctx.bank_len(Bank::Y)
    }

    /// Index of the last member that can be nonzero, if the family is
    /// finitely supported (`e` stops at `m`).
    pub fn last_nonzero(&self) -> Option<i64> {
        match self.kind {
            FamilyKind::Elementary => Some(self.m() as i64),
            FamilyKind::Custom if self.zero_tail => Some(self.custom.len() as i64 - 1),
            _ => None,
        }
    }

    /// `f_i`.
    pub fn member(&self, i: i64) -> Result<Poly> {
        if i < 0 {
            return Ok(Poly::zero(&self.ctx));
        }
        if let Some(p) = self.cache.read().expect("family cache poisoned").get(&i) {
            return Ok(p.clone());
        }
        let ctx = &self.ctx;
        let value = match self.kind {
            FamilyKind::Complete => complete(i, ctx, Bank::Y),
            FamilyKind::Elementary => elementary(i, ctx, Bank::Y),
            FamilyKind::PowerSum => power_sum(i, ctx, Bank::Y),
            FamilyKind::ElementaryPlusComplete => {
                elementary(i, ctx, Bank::Y) + complete(i, ctx, Bank::Y)
            }
            FamilyKind::Custom => match self.custom.get(i as usize) {
                Some(p) => p.clone(),
                None if self.zero_tail => Poly::zero(ctx),
                None => {
                    return Err(Error::FamilyOutOfRange {
                        index: i,
                        last: self.custom.len() as i64 - 1,
                    })
                }
            },
        };
        self.cache
            .write()
            .expect("family cache poisoned")
            .insert(i, value.clone());
        Ok(value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurMethod {
    Bialternant,
    JacobiTrudi,
    DualJacobiTrudi,
    Ssyt,
}

impl FromStr for SchurMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bialternant" => SchurMethod::Bialternant,
            "jacobi_trudi" | "jacobi-trudi" => SchurMethod::JacobiTrudi,
            "dual_jacobi_trudi" | "dual-jacobi-trudi" => SchurMethod::DualJacobiTrudi,
            "ssyt" => SchurMethod::Ssyt,
            other => return Err(Error::InvalidParameter(format!("unknown method `{other}`"))),
        })
    }
}

/// `det(x_j^(n-i))` over the variables of `bank`.
pub fn vandermonde(ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    let slots = ctx.bank_slots(bank);
    let n = slots.len();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    Ok(PolyMatrix::from_fn(n, |i, j| {
        Ok(Poly::var_pow(ctx, slots[j], (n - 1 - i) as u32))
    })?
    .determinant())
}

/// `det(x_j^(mu_i + n - i))` over the variables of `bank`.
pub fn alternant(mu: &[u32], ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    let slots = ctx.bank_slots(bank);
    let n = slots.len();
    if mu.len() != n {
        return Err(crate::PartitionError::LengthMismatch(mu.len(), n).into());
    }
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    Ok(PolyMatrix::from_fn(n, |i, j| {
        Ok(Poly::var_pow(ctx, slots[j], mu[i] + (n - 1 - i) as u32))
    })?
    .determinant())
}

fn padded(lambda: &Partition, n: usize) -> Result<Partition> {
    lambda.with_ambient(n).map_err(|_| Error::TooManyParts {
        partition: lambda.to_string(),
        length: lambda.length(),
        vars: n,
    })
}

/// `det(g_(lambda_i - i + j))` for the generator `g`, sized by the number of
/// nonzero parts.
fn generator_det(
    kind: GenKind,
    lambda: &Partition,
    ctx: &Arc<VarContext>,
    bank: Bank,
) -> Result<Poly> {
    let lambda = lambda.trimmed();
    let k = lambda.ambient();
    if k == 0 {
        return Ok(Poly::one(ctx));
    }
    let table: Vec<Poly> = (0..=(lambda.largest() as i64 + k as i64))
        .map(|d| gen(kind, d, ctx, bank))
        .collect();
    Ok(PolyMatrix::from_fn(k, |i, j| {
        let idx = lambda.part(i) as i64 - i as i64 + j as i64;
        Ok(if idx < 0 {
            Poly::zero(ctx)
        } else {
            table[idx as usize].clone()
        })
    })?
    .determinant())
}

/// `det(h_(lambda_i - i + j))`.
pub fn jacobi_trudi(lambda: &Partition, ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    generator_det(GenKind::Complete, lambda, ctx, bank)
}

/// `det(e_(lambda_i - i + j))`, which is the Schur polynomial of the
/// conjugate of `lambda`.
pub fn dual_jacobi_trudi(lambda: &Partition, ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    generator_det(GenKind::Elementary, lambda, ctx, bank)
}

/// Generating sum of semistandard tableaux of shape `lambda` with entries in
/// `1..=n`. Independent of every determinant code path.
pub fn ssyt_sum(lambda: &Partition, ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    let slots = ctx.bank_slots(bank);
    let n = slots.len();
    let shape = padded(lambda, n)?.trimmed();
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let col_height = |c: usize| rows.iter().filter(|&&len| len > c).count();

    let mut tableau: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut weight = vec![0u32; n];

    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        n: usize,
        col_height: &dyn Fn(usize) -> usize,
        tableau: &mut Vec<Vec<usize>>,
        weight: &mut Vec<u32>,
        counts: &mut HashMap<Vec<u32>, u64>,
    ) {
        let Some(&(r, c)) = cells.get(pos) else {
            *counts.entry(weight.clone()).or_default() += 1;
            return;
        };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(tableau[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(tableau[r - 1][c] + 1);
        }
        // leave room for the strictly increasing cells below in this column
        let hi = n - (col_height(c) - 1 - r);
        for v in lo..=hi {
            tableau[r][c] = v;
            weight[v - 1] += 1;
            fill(pos + 1, cells, n, col_height, tableau, weight, counts);
            weight[v - 1] -= 1;
        }
        tableau[r][c] = 0;
    }

    fill(
        0,
        &cells,
        n,
        &col_height,
        &mut tableau,
        &mut weight,
        &mut counts,
    );
    Ok(Poly::from_terms(
        ctx,
        counts
            .into_iter()
            .map(|(w, c)| (bank_monomial(ctx, &slots, &w), BigInt::from(c))),
    ))
}

/// Schur polynomial `s_lambda` in the variables of `bank`, by `method`.
///
/// Every method returns the same polynomial. `DualJacobiTrudi` evaluates
/// `det(e_(lambda'_i - i + j))` on the conjugate shape.
pub fn schur(
    lambda: &Partition,
    ctx: &Arc<VarContext>,
    bank: Bank,
    method: SchurMethod,
) -> Result<Poly> {
    let n = ctx.bank_len(bank);
    match method {
        SchurMethod::Bialternant => {
            let lambda = padded(lambda, n)?;
            let num = alternant(lambda.parts(), ctx, bank)?;
            Ok(num.exact_div(&vandermonde(ctx, bank)?)?)
        }
        SchurMethod::JacobiTrudi => jacobi_trudi(lambda, ctx, bank),
        SchurMethod::DualJacobiTrudi => dual_jacobi_trudi(&lambda.conjugate(), ctx, bank),
        SchurMethod::Ssyt => ssyt_sum(lambda, ctx, bank),
    }
}

/// `s_lambda(x_1..x_n)` in a fresh context holding only `x1..xn`.
pub fn schur_x(lambda: &Partition, n: usize, method: SchurMethod) -> Result<Poly> {
    schur(lambda, &VarContext::x_only(n), Bank::X, method)
}

/// `S_mu = det(x_j^(mu_i + n - i)) / det(x_j^(n - i))` for an arbitrary
/// composition, computed as `sign * s_lambda` after normalization (zero when
/// degenerate).
pub fn s_mu(mu: &Composition, ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    let n = ctx.bank_len(bank);
    if mu.len() != n {
        return Err(crate::PartitionError::LengthMismatch(mu.len(), n).into());
    }
    match normalize(mu) {
        Normalization::Degenerate => Ok(Poly::zero(ctx)),
        Normalization::Partition { partition, sign } => {
            let s = schur(&partition, ctx, bank, SchurMethod::Bialternant)?;
            Ok(if sign < 0 { -s } else { s })
        }
    }
}

/// `S_mu` as the literal quotient of the alternant by the Vandermonde.
pub fn s_mu_direct(mu: &Composition, ctx: &Arc<VarContext>, bank: Bank) -> Result<Poly> {
    let num = alternant(mu.entries(), ctx, bank)?;
    Ok(num.exact_div(&vandermonde(ctx, bank)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enum_by_weight;

    fn yctx(m: usize) -> Arc<VarContext> {
        VarContext::builder().indexed(Bank::Y, m).build()
    }

    fn p(ctx: &Arc<VarContext>, s: &str) -> Poly {
        Poly::parse(ctx, s).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn generators() {
        let c = yctx(2);
        assert_eq!(complete(2, &c, Bank::Y), p(&c, "y1^2 + y1*y2 + y2^2"));
        assert!(elementary(3, &c, Bank::Y).is_zero());
        assert_eq!(elementary(2, &c, Bank::Y), p(&c, "y1*y2"));
        assert_eq!(power_sum(0, &yctx(3), Bank::Y), p(&yctx(3), "3"));
        assert_eq!(power_sum(3, &c, Bank::Y), p(&c, "y1^3 + y2^3"));
        assert!(complete(-1, &c, Bank::Y).is_zero());
        assert!(complete(0, &c, Bank::Y).is_one());
        assert!(elementary(0, &c, Bank::Y).is_one());
    }

    #[test]
    fn family_members() {
        let c = yctx(2);
        let fam = Family::new(FamilyKind::ElementaryPlusComplete, &c).unwrap();
        assert_eq!(fam.member(1).unwrap(), p(&c, "2*y1 + 2*y2"));
        assert!(fam.member(-3).unwrap().is_zero());
        let h = Family::new(FamilyKind::Complete, &c).unwrap();
        assert!(h.member(0).unwrap().is_one());
        assert!(h.member(-1).unwrap().is_zero());
    }

    #[test]
    fn custom_family_range() {
        let c = VarContext::builder()
            .indexed(Bank::X, 1)
            .indexed(Bank::Y, 1)
            .build();
        let fam = Family::custom(&c, vec![p(&c, "1"), p(&c, "y1 + 2")], false).unwrap();
        assert_eq!(fam.member(1).unwrap(), p(&c, "y1 + 2"));
        assert_eq!(
            fam.member(2),
            Err(Error::FamilyOutOfRange { index: 2, last: 1 })
        );
        let finite = Family::custom(&c, vec![p(&c, "1")], true).unwrap();
        assert!(finite.member(7).unwrap().is_zero());
        assert_eq!(
            Family::custom(&c, vec![p(&c, "x1")], true).unwrap_err(),
            Error::FamilyVariable("x1".into())
        );
    }

    #[test]
    fn schur_examples() {
        let c = VarContext::x_only(2);
        let s21 = schur(&part("2,1"), &c, Bank::X, SchurMethod::Bialternant).unwrap();
        assert_eq!(s21.to_string(), "x1^2*x2 + x1*x2^2");
        let s20 = schur(&part("2,0"), &c, Bank::X, SchurMethod::Bialternant).unwrap();
        assert_eq!(s20, p(&c, "x1^2 + x1*x2 + x2^2"));
        for n in 1..=4 {
            for m in [
                SchurMethod::Bialternant,
                SchurMethod::JacobiTrudi,
                SchurMethod::DualJacobiTrudi,
                SchurMethod::Ssyt,
            ] {
                assert!(schur_x(&Partition::empty(n), n, m).unwrap().is_one());
            }
        }
    }

    #[test]
    fn too_many_parts() {
        let err = schur_x(&part("1,1,1"), 2, SchurMethod::Bialternant).unwrap_err();
        assert!(matches!(
            err,
            Error::TooManyParts {
                length: 3,
                vars: 2,
                ..
            }
        ));
        // Jacobi-Trudi is defined and vanishes
        assert!(schur_x(&part("1,1,1"), 2, SchurMethod::JacobiTrudi)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn methods_agree_small() {
        for n in 1..=3 {
            let c = VarContext::x_only(n);
            for lambda in enum_by_weight(n, 4) {
                let b = schur(&lambda, &c, Bank::X, SchurMethod::Bialternant).unwrap();
                let jt = schur(&lambda, &c, Bank::X, SchurMethod::JacobiTrudi).unwrap();
                let t = schur(&lambda, &c, Bank::X, SchurMethod::Ssyt).unwrap();
                let d = schur(&lambda, &c, Bank::X, SchurMethod::DualJacobiTrudi).unwrap();
                assert_eq!(b, jt, "{lambda}");
                assert_eq!(b, t, "{lambda}");
                assert_eq!(b, d, "{lambda}");
            }
        }
    }

    #[test]
    fn s_mu_examples() {
        let c = VarContext::x_only(3);
        let s = s_mu(&"0,3,0".parse().unwrap(), &c, Bank::X).unwrap();
        let s210 = schur(&part("2,1,0"), &c, Bank::X, SchurMethod::Bialternant).unwrap();
        assert_eq!(s, -s210);
        assert!(s_mu(&"1,2,1".parse().unwrap(), &c, Bank::X)
            .unwrap()
            .is_zero());
        let s_part = s_mu(&"3,1,1".parse().unwrap(), &c, Bank::X).unwrap();
        assert_eq!(
            s_part,
            schur(&part("3,1,1"), &c, Bank::X, SchurMethod::Ssyt).unwrap()
        );
        assert_eq!(
            s_mu_direct(&"0,3,0".parse().unwrap(), &c, Bank::X).unwrap(),
            s
        );
    }
}

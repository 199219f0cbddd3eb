//! Determinant builders and the two sides of every identity.
//!
//! Unbounded sums are truncated by degree. Each summand `s_lambda * det` is
//! homogeneous of degree `|lambda|` in `x` (family identities) or in `t`
//! (power identities), so summing over `|lambda| <= D` gives the full sum
//! truncated at degree `D` exactly.

use std::sync::Arc;

use rayon::prelude::*;

use super::window::{TMode, Window};
use crate::partitions::{compositions_in_box, enum_bounded, enum_by_weight, Partition};
use crate::poly::{Bank, Poly, PolyMatrix, VarContext};
use crate::symfunc::{s_mu, schur, vandermonde, Family, SchurMethod};
use crate::{Error, Result};

/// `x1..xn, y1..ym, z`.
pub fn family_context(n: usize, m: usize) -> Arc<VarContext> {
    VarContext::builder()
        .indexed(Bank::X, n)
        .indexed(Bank::Y, m)
        .single(Bank::Z)
        .build()
}

/// `x1..xn` followed by the `t` variables that `mode` needs.
pub fn t_context(n: usize, mode: TMode) -> Arc<VarContext> {
    let b = VarContext::builder().indexed(Bank::X, n);
    match mode {
        TMode::Distinct => b.indexed(Bank::T, n).build(),
        TMode::Repeated => b.single(Bank::T).build(),
        TMode::Ones => b.build(),
    }
}

fn x_slots(ctx: &VarContext) -> Vec<usize> {
    ctx.bank_slots(Bank::X)
}

/// Sums `f(item)` over `items` in parallel. Polynomial addition is
/// associative and commutative, so the result does not depend on how the
/// reduction is scheduled.
pub(crate) fn par_sum<T, F>(ctx: &Arc<VarContext>, items: &[T], f: F) -> Result<Poly>
where
    T: Sync,
    F: Fn(&T) -> Result<Poly> + Sync + Send,
{
    items
        .par_iter()
        .map(f)
        .try_reduce(|| Poly::zero(ctx), |a, b| Ok(a + b))
}

fn schur_x(lambda: &Partition, ctx: &Arc<VarContext>) -> Result<Poly> {
    schur(lambda, ctx, Bank::X, SchurMethod::Bialternant)
}

fn check_window(lambda: &Partition, w: &Window) -> Result<()> {
    if lambda.ambient() != w.len() {
        return Err(Error::InvalidParameter(format!(
            "partition {lambda} has length {} but the window has {}",
            lambda.ambient(),
            w.len()
        )));
    }
    Ok(())
}

/// `det(f_(lambda_i - i + j))` with entries outside the window set to zero.
pub fn family_det(lambda: &Partition, fam: &Family, w: &Window) -> Result<Poly> {
    check_window(lambda, w)?;
    let n = lambda.ambient();
    if n == 0 {
        return Ok(Poly::one(fam.context()));
    }
    let mut failure = None;
    let m = PolyMatrix::from_fn(n, |i, j| {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if !w.admits(j, k) {
            return Ok(Poly::zero(fam.context()));
        }
        Ok(fam.member(k).unwrap_or_else(|e| {
            failure.get_or_insert(e);
            Poly::zero(fam.context())
        }))
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(m.determinant()),
    }
}

/// The value standing in for `t_j` (0-based column) under `mode`.
fn t_value(ctx: &Arc<VarContext>, mode: TMode, col: usize) -> Result<Poly> {
    Ok(match mode {
        TMode::Distinct => Poly::var(ctx, ctx.indexed_slot(Bank::T, col as u32 + 1)?),
        TMode::Repeated => Poly::var(ctx, ctx.single_slot(Bank::T)?),
        TMode::Ones => Poly::one(ctx),
    })
}

/// `det(t_j^(lambda_i - i + j))` with entries outside the window (including
/// negative exponents) set to zero.
pub fn power_det(
    lambda: &Partition,
    ctx: &Arc<VarContext>,
    mode: TMode,
    w: &Window,
) -> Result<Poly> {
    check_window(lambda, w)?;
    let n = lambda.ambient();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    let ts = (0..n)
        .map(|j| t_value(ctx, mode, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_fn(n, |i, j| {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        Ok(if w.admits(j, k) {
            ts[j].pow(k as u32)
        } else {
            Poly::zero(ctx)
        })
    })?
    .determinant())
}

/// `sum_{|lambda| <= D} s_lambda(x) det(f_(lambda_i - i + j))`.
pub fn lhs_unbounded_family(fam: &Family, degree: u32) -> Result<Poly> {
    let ctx = fam.context();
    let n = ctx.bank_len(Bank::X);
    let lambdas: Vec<Partition> = enum_by_weight(n, degree).collect();
    par_sum(ctx, &lambdas, |lambda| {
        let det = family_det(lambda, fam, &Window::unbounded(n))?;
        if det.is_zero() {
            return Ok(det);
        }
        Ok(schur_x(lambda, ctx)? * det)
    })
}

/// `F_D(z) = sum_{k <= D} f_k z^k`.
pub fn generating_polynomial(fam: &Family, degree: u32) -> Result<Poly> {
    let ctx = fam.context();
    let z = ctx.single_slot(Bank::Z)?;
    let mut total = Poly::zero(ctx);
    for k in 0..=degree {
        total = total + fam.member(k as i64)? * Poly::var_pow(ctx, z, k);
    }
    Ok(total)
}

/// `prod_i F(y, x_i)` truncated at `x`-degree `D`.
pub fn rhs_unbounded_family(fam: &Family, degree: u32) -> Result<Poly> {
    let ctx = fam.context();
    let z = ctx.single_slot(Bank::Z)?;
    let f = generating_polynomial(fam, degree)?;
    let mut product = Poly::one(ctx);
    for x in x_slots(ctx) {
        let fx = f.substitute(z, &Poly::var(ctx, x))?;
        product = product.mul_truncated(&fx, Bank::X, degree)?;
    }
    Ok(product)
}

fn require_t_grading(mode: TMode) -> Result<()> {
    if mode == TMode::Ones {
        return Err(Error::InvalidParameter(
            "the unbounded power identity needs t variables (distinct or repeated)".into(),
        ));
    }
    Ok(())
}

/// `sum_{|lambda| <= D} s_lambda(x) det(t_j^(lambda_i - i + j))`, the full
/// left side truncated at `t`-degree `D`.
pub fn lhs_unbounded_t(ctx: &Arc<VarContext>, mode: TMode, degree: u32) -> Result<Poly> {
    require_t_grading(mode)?;
    let n = ctx.bank_len(Bank::X);
    let lambdas: Vec<Partition> = enum_by_weight(n, degree).collect();
    par_sum(ctx, &lambdas, |lambda| {
        let det = power_det(lambda, ctx, mode, &Window::unbounded(n))?;
        if det.is_zero() {
            return Ok(det);
        }
        Ok(schur_x(lambda, ctx)? * det)
    })
}

/// `1 - x_j t_i` for 0-based `i` (row) and `x` slot `xj`.
fn one_minus_xt(ctx: &Arc<VarContext>, mode: TMode, xj: usize, row: usize) -> Result<Poly> {
    Ok(Poly::one(ctx) - Poly::var(ctx, xj) * t_value(ctx, mode, row)?)
}

/// Numerator of the unbounded power identity with row `i` multiplied by
/// `prod_k (1 - x_k t_i)`: `det(x_j^(n-i) prod_{k != j} (1 - x_k t_i))`.
pub fn rhs_unbounded_t_cleared(ctx: &Arc<VarContext>, mode: TMode) -> Result<Poly> {
    require_t_grading(mode)?;
    let xs = x_slots(ctx);
    let n = xs.len();
    let factors = (0..n)
        .map(|i| xs.iter().map(|&x| one_minus_xt(ctx, mode, x, i)).collect())
        .collect::<Result<Vec<Vec<Poly>>>>()?;
    Ok(PolyMatrix::from_fn(n, |i, j| {
        let mut entry = Poly::var_pow(ctx, xs[j], (n - 1 - i) as u32);
        for (k, f) in factors[i].iter().enumerate() {
            if k != j {
                entry = entry * f;
            }
        }
        Ok(entry)
    })?
    .determinant())
}

/// `prod_{i,j} (1 - x_j t_i)`.
pub fn cleared_denominator(ctx: &Arc<VarContext>, mode: TMode) -> Result<Poly> {
    require_t_grading(mode)?;
    let xs = x_slots(ctx);
    let mut product = Poly::one(ctx);
    for i in 0..xs.len() {
        for &x in &xs {
            product = product * one_minus_xt(ctx, mode, x, i)?;
        }
    }
    Ok(product)
}

/// Both sides of the cleared unbounded power identity, truncated at
/// `t`-degree `D`: `(L V P, N)` where `L` is the truncated left side, `V` the
/// Vandermonde, `P` the cleared denominator and `N` the cleared numerator.
pub fn unbounded_t_cleared_sides(
    ctx: &Arc<VarContext>,
    mode: TMode,
    degree: u32,
) -> Result<(Poly, Poly, usize)> {
    let lhs = lhs_unbounded_t(ctx, mode, degree)?;
    let v = vandermonde(ctx, Bank::X)?;
    let p = cleared_denominator(ctx, mode)?;
    let left = lhs
        .mul_truncated(&v, Bank::T, degree)?
        .mul_truncated(&p, Bank::T, degree)?;
    let right = rhs_unbounded_t_cleared(ctx, mode)?.truncate(Bank::T, degree);
    Ok((left, right, lhs.num_terms()))
}

pub(crate) fn check_bound(a: &[u32], n: usize) -> Result<()> {
    if a.len() != n {
        return Err(Error::InvalidParameter(format!(
            "bound has {} entries, expected {n}",
            a.len()
        )));
    }
    if a.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!(
            "bound {a:?} must be weakly decreasing"
        )));
    }
    Ok(())
}

/// `sum_{lambda <= a} s_lambda(x) det(f_(lambda_i - i + j))` with the window
/// `a`.
pub fn lhs_bounded_family(fam: &Family, a: &[u32]) -> Result<Poly> {
    let ctx = fam.context();
    check_bound(a, ctx.bank_len(Bank::X))?;
    let w = Window::bounded(a);
    let lambdas: Vec<Partition> = enum_bounded(a)?.collect();
    par_sum(ctx, &lambdas, |lambda| {
        let det = family_det(lambda, fam, &w)?;
        if det.is_zero() {
            return Ok(det);
        }
        Ok(schur_x(lambda, ctx)? * det)
    })
}

/// `sum_{mu in prod [0, a_i]} S_mu(x) f_mu`, the composition-side sum that
/// the bounded partition sum regroups.
pub fn box_sum_family(fam: &Family, a: &[u32]) -> Result<Poly> {
    let ctx = fam.context();
    let n = ctx.bank_len(Bank::X);
    if a.len() != n {
        return Err(Error::InvalidParameter(format!(
            "bound must have {n} entries"
        )));
    }
    let mus: Vec<_> = compositions_in_box(a).collect();
    par_sum(ctx, &mus, |mu| {
        let s = s_mu(mu, ctx, Bank::X)?;
        if s.is_zero() {
            return Ok(s);
        }
        let mut prod = s;
        for &k in mu.entries() {
            prod = prod * fam.member(k as i64)?;
        }
        Ok(prod)
    })
}

/// `det(x_j^(n-i) F(y, x_j, a_i)) / det(x_j^(n-i))` with
/// `F(y, z, a) = sum_{k <= a} f_k z^k`.
pub fn rhs_bounded_family(fam: &Family, a: &[u32]) -> Result<Poly> {
    let ctx = fam.context();
    let xs = x_slots(ctx);
    let n = xs.len();
    check_bound(a, n)?;
    let members = (0..=a.iter().copied().max().unwrap_or(0) as i64)
        .map(|k| fam.member(k))
        .collect::<Result<Vec<_>>>()?;
    let num = PolyMatrix::from_fn(n, |i, j| {
        let mut entry = Poly::zero(ctx);
        for (k, f) in members.iter().enumerate().take(a[i] as usize + 1) {
            entry = entry + f * &Poly::var_pow(ctx, xs[j], (k + n - 1 - i) as u32);
        }
        Ok(entry)
    })?
    .determinant();
    Ok(num.exact_div(&vandermonde(ctx, Bank::X)?)?)
}

/// `sum_{lambda <= a} s_lambda(x) det(t_j^(lambda_i - i + j))`.
pub fn lhs_bounded_t(ctx: &Arc<VarContext>, a: &[u32], mode: TMode) -> Result<Poly> {
    check_bound(a, ctx.bank_len(Bank::X))?;
    let w = Window::bounded(a);
    let lambdas: Vec<Partition> = enum_bounded(a)?.collect();
    par_sum(ctx, &lambdas, |lambda| {
        let det = power_det(lambda, ctx, mode, &w)?;
        if det.is_zero() {
            return Ok(det);
        }
        Ok(schur_x(lambda, ctx)? * det)
    })
}

/// `det(x_j^(n-i) (1 - (x_j t_i)^(a_i+1)) / (1 - x_j t_i)) / det(x_j^(n-i))`,
/// each entry expanded as the finite geometric sum.
pub fn rhs_bounded_t(ctx: &Arc<VarContext>, a: &[u32], mode: TMode) -> Result<Poly> {
    let xs = x_slots(ctx);
    let n = xs.len();
    check_bound(a, n)?;
    let ts = (0..n)
        .map(|i| t_value(ctx, mode, i))
        .collect::<Result<Vec<_>>>()?;
    let num = PolyMatrix::from_fn(n, |i, j| {
        let xt = Poly::var(ctx, xs[j]) * &ts[i];
        let mut geom = Poly::zero(ctx);
        let mut power = Poly::one(ctx);
        for _ in 0..=a[i] {
            geom = geom + &power;
            power = power * &xt;
        }
        Ok(Poly::var_pow(ctx, xs[j], (n - 1 - i) as u32) * geom)
    })?
    .determinant();
    Ok(num.exact_div(&vandermonde(ctx, Bank::X)?)?)
}

/// Closed form for a constant bound: `det(x_i^(a+2n-j) - x_i^(j-1))` over
/// `prod_i (x_i - 1) prod_{i<j} (x_i - x_j)(x_i x_j - 1)`.
pub fn macdonald_rhs(n: usize, a: u32) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let ctx = VarContext::x_only(n);
    let xs = x_slots(&ctx);
    let num = PolyMatrix::from_fn(n, |i, j| {
        let j1 = j as u32 + 1;
        Ok(Poly::var_pow(&ctx, xs[i], a + 2 * n as u32 - j1) - Poly::var_pow(&ctx, xs[i], j1 - 1))
    })?
    .determinant();
    let one = Poly::one(&ctx);
    let mut den = one.clone();
    for i in 0..n {
        let xi = Poly::var(&ctx, xs[i]);
        den = den * (&xi - &one);
        for &xj in &xs[i + 1..] {
            let xj = Poly::var(&ctx, xj);
            den = den * (&xi - &xj) * (&xi * &xj - &one);
        }
    }
    Ok(num.exact_div(&den)?)
}

/// `sum_{lambda <= (a, ..., a)} s_lambda(x_1..x_n)`.
pub fn bounded_schur_sum(n: usize, a: u32) -> Result<Poly> {
    let ctx = VarContext::x_only(n);
    let lambdas: Vec<Partition> = enum_bounded(&vec![a; n])?.collect();
    par_sum(&ctx, &lambdas, |lambda| schur_x(lambda, &ctx))
}

/// `x1..xn, y1..ym` for the classical Cauchy identities.
pub fn cauchy_context(n: usize, m: usize) -> Arc<VarContext> {
    VarContext::builder()
        .indexed(Bank::X, n)
        .indexed(Bank::Y, m)
        .build()
}

fn schur_y_or_zero(lambda: &Partition, ctx: &Arc<VarContext>) -> Result<Poly> {
    if lambda.length() > ctx.bank_len(Bank::Y) {
        Ok(Poly::zero(ctx))
    } else {
        schur(lambda, ctx, Bank::Y, SchurMethod::Bialternant)
    }
}

/// `sum_{|lambda| <= D} s_lambda(x) s_lambda(y)`, or with `dual` the sum of
/// `s_lambda(x) s_lambda'(y)`.
pub fn cauchy_lhs(ctx: &Arc<VarContext>, degree: u32, dual: bool) -> Result<Poly> {
    let n = ctx.bank_len(Bank::X);
    let lambdas: Vec<Partition> = enum_by_weight(n, degree).collect();
    par_sum(ctx, &lambdas, |lambda| {
        let shape = if dual {
            lambda.conjugate()
        } else {
            lambda.clone()
        };
        let sy = schur_y_or_zero(&shape, ctx)?;
        if sy.is_zero() {
            return Ok(sy);
        }
        Ok(schur_x(lambda, ctx)? * sy)
    })
}

/// `prod_{i,j} 1/(1 - x_i y_j)` (or `prod (1 + x_i y_j)` with `dual`) as a
/// product of geometric sums, truncated at `x`-degree `D`.
pub fn cauchy_rhs(ctx: &Arc<VarContext>, degree: u32, dual: bool) -> Result<Poly> {
    let mut product = Poly::one(ctx);
    for x in ctx.bank_slots(Bank::X) {
        for y in ctx.bank_slots(Bank::Y) {
            let xy = Poly::var(ctx, x) * Poly::var(ctx, y);
            let factor = if dual {
                Poly::one(ctx) + xy
            } else {
                (0..=degree).fold(Poly::zero(ctx), |acc, k| acc + xy.pow(k))
            };
            product = product.mul_truncated(&factor, Bank::X, degree)?;
        }
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::FamilyKind;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn family_det_examples() {
        let ctx = family_context(2, 2);
        let h = Family::new(FamilyKind::Complete, &ctx).unwrap();
        let w = Window::unbounded(2);
        assert!(family_det(&part("0,0"), &h, &w).unwrap().is_one());
        assert_eq!(
            family_det(&part("1,1"), &h, &w).unwrap(),
            Poly::parse(&ctx, "y1*y2").unwrap()
        );
        assert!(family_det(&part("1,1,0"), &h, &w).is_err());
    }

    #[test]
    fn power_det_examples() {
        let ctx = t_context(2, TMode::Repeated);
        let t = |s: &str| Poly::parse(&ctx, s).unwrap();
        let w = Window::bounded(&[2, 2]);
        assert_eq!(
            power_det(&part("2,1"), &ctx, TMode::Repeated, &w).unwrap(),
            t("t^3")
        );
        assert_eq!(
            power_det(&part("2,0"), &ctx, TMode::Repeated, &w).unwrap(),
            t("t^2")
        );
        let free = Window::unbounded(2);
        assert!(power_det(&part("1,1"), &ctx, TMode::Repeated, &free)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn geometric_series_one_variable() {
        let ctx = family_context(1, 1);
        let h = Family::new(FamilyKind::Complete, &ctx).unwrap();
        let expected = Poly::parse(&ctx, "1 + x1*y1 + x1^2*y1^2").unwrap();
        assert_eq!(lhs_unbounded_family(&h, 2).unwrap(), expected);
        assert_eq!(rhs_unbounded_family(&h, 2).unwrap(), expected);
        assert!(lhs_unbounded_family(&h, 0).unwrap().is_one());
    }

    #[test]
    fn unbounded_t_one_variable() {
        let ctx = t_context(1, TMode::Distinct);
        let lhs = lhs_unbounded_t(&ctx, TMode::Distinct, 3).unwrap();
        assert_eq!(
            lhs,
            Poly::parse(&ctx, "1 + x1*t1 + x1^2*t1^2 + x1^3*t1^3").unwrap()
        );
        let (left, right, _) = unbounded_t_cleared_sides(&ctx, TMode::Distinct, 3).unwrap();
        assert!(left.is_one());
        assert_eq!(left, right);
        assert!(lhs_unbounded_t(&t_context(1, TMode::Ones), TMode::Ones, 3).is_err());
    }

    #[test]
    fn macdonald_small() {
        let c1 = VarContext::x_only(1);
        assert_eq!(
            macdonald_rhs(1, 2).unwrap(),
            Poly::parse(&c1, "1 + x1 + x1^2").unwrap()
        );
        let c2 = VarContext::x_only(2);
        assert_eq!(
            macdonald_rhs(2, 1).unwrap(),
            Poly::parse(&c2, "1 + x1 + x2 + x1*x2").unwrap()
        );
    }

    #[test]
    fn bounded_rejects_bad_bounds() {
        let ctx = family_context(2, 2);
        let h = Family::new(FamilyKind::Complete, &ctx).unwrap();
        assert!(lhs_bounded_family(&h, &[1, 2]).is_err());
        assert!(rhs_bounded_family(&h, &[2]).is_err());
    }
}

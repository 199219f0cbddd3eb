use std::sync::Arc;

use crate::partitions::{Composition, Partition};
use crate::perm::signed_permutations;
use crate::poly::{Bank, Poly, VarContext};
use crate::symfunc::{s_mu, s_mu_direct, Family};
use crate::Result;

/// `S_mu` computed through normalization and as the literal quotient.
pub fn lemma1_case(mu: &Composition, ctx: &Arc<VarContext>) -> Result<(Poly, Poly)> {
    Ok((s_mu(mu, ctx, Bank::X)?, s_mu_direct(mu, ctx, Bank::X)?))
}

/// One permutation of the class of `lambda`: `mu_j = lambda_(p(j)) - p(j) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignRow {
    /// One-line notation, 1-based: `perm[j-1] = p(j)`.
    pub perm: Vec<usize>,
    /// May contain negative entries, which make the row vanish.
    pub mu: Vec<i64>,
    pub sign: i32,
}

/// All `n!` rows of the class of `lambda`.
pub fn sign_table(lambda: &Partition) -> Vec<SignRow> {
    let n = lambda.ambient();
    signed_permutations(n)
        .map(|(p, sign)| SignRow {
            mu: (0..n)
                .map(|j| lambda.part(p[j]) as i64 - p[j] as i64 + j as i64)
                .collect(),
            perm: p.iter().map(|k| k + 1).collect(),
            sign,
        })
        .collect()
}

/// `sum_p sgn(p) prod_j f_(lambda_(p(j)) - p(j) + j)` with negative
/// subscripts contributing zero.
pub fn lemma2_brute_force(lambda: &Partition, fam: &Family) -> Result<Poly> {
    let ctx = fam.context();
    let mut total = Poly::zero(ctx);
    for row in sign_table(lambda) {
        if row.mu.iter().any(|&k| k < 0) {
            continue;
        }
        let mut prod = Poly::constant(ctx, row.sign);
        for &k in &row.mu {
            prod = prod * fam.member(k)?;
        }
        total = total + prod;
    }
    Ok(total)
}

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use schur_cauchy::partitions::Partition;
use schur_cauchy::poly::{Bank, Monomial, Poly, PolyMatrix, VarContext};

pub fn ctx3() -> Arc<VarContext> {
    VarContext::builder()
        .indexed(Bank::X, 2)
        .indexed(Bank::Y, 1)
        .build()
}

/// Small random polynomials over `x1, x2, y1`.
pub fn poly_strategy(ctx: Arc<VarContext>, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), -9i64..=9), 0..=max_terms).prop_map(
        move |terms| {
            Poly::from_terms(
                &ctx,
                terms.into_iter().map(|((a, b, c), k)| {
                    (Monomial::from_exponents(vec![a, b, c]), BigInt::from(k))
                }),
            )
        },
    )
}

pub fn matrix_strategy(ctx: Arc<VarContext>, n: usize) -> impl Strategy<Value = Vec<Vec<Poly>>> {
    prop::collection::vec(prop::collection::vec(poly_strategy(ctx, 2), n), n)
}

/// Partitions with `n` parts, each at most `max_part`.
pub fn partition_strategy(n: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

pub fn det(rows: Vec<Vec<Poly>>) -> Poly {
    PolyMatrix::new(rows).unwrap().determinant()
}

pub fn p(ctx: &Arc<VarContext>, s: &str) -> Poly {
    Poly::parse(ctx, s).unwrap()
}

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

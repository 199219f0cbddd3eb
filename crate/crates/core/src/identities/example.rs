use super::sides::{lhs_bounded_t, power_det, rhs_bounded_t, t_context};
use super::window::{TMode, Window};
use crate::partitions::{enum_bounded, Partition};
use crate::poly::{Bank, Poly};
use crate::symfunc::{schur, SchurMethod};
use crate::Result;

#[derive(Clone, Debug)]
pub struct ExampleRow {
    pub partition: Partition,
    pub det: Poly,
    pub schur: Poly,
}

/// The worked `n = 2`, `a = (2, 2)`, repeated-`t` example.
#[derive(Clone, Debug)]
pub struct ExampleTable {
    /// Ascending lexicographic order, `(0,0)` first.
    pub rows: Vec<ExampleRow>,
    pub sum: Poly,
    /// `(1 + t x1 + t^2 x1^2)(1 + t x2 + t^2 x2^2)`.
    pub product: Poly,
    /// Right side of the bounded power identity, by exact division.
    pub rhs: Poly,
}

impl ExampleTable {
    pub fn holds(&self) -> bool {
        self.sum == self.product && self.sum == self.rhs
    }
}

pub fn worked_example_table() -> Result<ExampleTable> {
    let a = [2, 2];
    let ctx = t_context(2, TMode::Repeated);
    let w = Window::bounded(&a);
    let mut rows = enum_bounded(&a)?
        .map(|partition| {
            Ok(ExampleRow {
                det: power_det(&partition, &ctx, TMode::Repeated, &w)?,
                schur: schur(&partition, &ctx, Bank::X, SchurMethod::Bialternant)?,
                partition,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.reverse();
    let sum = lhs_bounded_t(&ctx, &a, TMode::Repeated)?;
    let product =
        Poly::parse(&ctx, "1 + t*x1 + t^2*x1^2")? * Poly::parse(&ctx, "1 + t*x2 + t^2*x2^2")?;
    let rhs = rhs_bounded_t(&ctx, &a, TMode::Repeated)?;
    Ok(ExampleTable {
        rows,
        sum,
        product,
        rhs,
    })
}

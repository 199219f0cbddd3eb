//! Exact sparse multivariate polynomials over the integers.
//!
//! Every [`Poly`] carries a shared [`VarContext`]; binary operations require
//! both operands to use the same context. Terms are kept in a map ordered by
//! graded-lex so the canonical form, equality and printing are deterministic.

mod context;
mod division;
mod matrix;
mod monomial;
mod parse;
#[allow(clippy::module_inception)]
mod poly;

pub use context::{Bank, ContextBuilder, Var, VarContext};
pub use matrix::{PolyMatrix, MAX_DET_SIZE};
pub use monomial::Monomial;
pub use poly::{ArithKind, Poly};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands use different variable contexts")]
    ContextMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder would start with {0}")]
    NotDivisible(String),
    #[error("cannot substitute {0}: it occurs in the replacement")]
    SelfSubstitution(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("matrix must be square with size 1..={max}, got {rows}x{cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        max: usize,
    },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

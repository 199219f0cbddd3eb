//! Exact Schur polynomials and mechanical verification of generalized Cauchy
//! identities.
//!
//! * [`poly`]: sparse integer polynomials, exact division, determinants.
//! * [`partitions`]: partitions, compositions, enumeration, normalization.
//! * [`symfunc`]: `h`, `e`, `p` generators, coefficient families and four
//!   Schur algorithms.
//! * [`identities`]: both sides of every identity plus the verifiers.
//! * [`cli`]: the `schur-cauchy` command line.

pub mod cli;
pub mod identities;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod symfunc;

use thiserror::Error;

pub use partitions::PartitionError;
pub use poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(
        "partition {partition} has {length} nonzero parts but only {vars} variables are available"
    )]
    TooManyParts {
        partition: String,
        length: usize,
        vars: usize,
    },
    #[error("custom family defines f_0..f_{last} but f_{index} was requested")]
    FamilyOutOfRange { index: i64, last: i64 },
    #[error("custom family member uses `{0}`; only y variables are allowed")]
    FamilyVariable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

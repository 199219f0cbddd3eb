//! Both sides of every identity and the verifiers that compare them.

mod example;
mod lemmas;
mod sides;
mod verify;
mod window;

pub use example::{worked_example_table, ExampleRow, ExampleTable};
pub use lemmas::{lemma1_case, lemma2_brute_force, sign_table, SignRow};
pub use sides::{
    bounded_schur_sum, box_sum_family, cauchy_context, cauchy_lhs, cauchy_rhs, cleared_denominator,
    family_context, family_det, generating_polynomial, lhs_bounded_family, lhs_bounded_t,
    lhs_unbounded_family, lhs_unbounded_t, macdonald_rhs, power_det, rhs_bounded_family,
    rhs_bounded_t, rhs_unbounded_family, rhs_unbounded_t_cleared, t_context,
    unbounded_t_cleared_sides,
};
pub use verify::{
    build_family, verify, IdentityId, IdentityReport, Params, Verdict, Witness, MAX_BOUND, MAX_BOX,
    MAX_DEGREE, MAX_M, MAX_N,
};
pub use window::{TMode, Window};

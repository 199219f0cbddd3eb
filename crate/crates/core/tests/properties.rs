mod common;

use proptest::prelude::*;
use schur_cauchy::identities::{family_context, family_det, power_det, t_context, TMode, Window};
use schur_cauchy::partitions::{
    compositions_in_box, enum_bounded, normalize, Composition, Normalization,
};
use schur_cauchy::poly::{Bank, Poly, PolyMatrix, VarContext};
use schur_cauchy::symfunc::{alternant, schur, Family, FamilyKind, SchurMethod};

use common::{ctx3, det, matrix_strategy, partition_strategy, poly_strategy};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly_strategy(ctx3(), 5), b in poly_strategy(ctx3(), 5), c in poly_strategy(ctx3(), 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Poly::zero(a.context()), a.clone());
        prop_assert_eq!(&a * &Poly::one(a.context()), a.clone());
        prop_assert!((&a + &(-a.clone())).is_zero());
    }

    #[test]
    fn division_undoes_multiplication(a in poly_strategy(ctx3(), 4), b in poly_strategy(ctx3(), 4)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn display_parses_back(a in poly_strategy(ctx3(), 6)) {
        prop_assert_eq!(Poly::parse(a.context(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn truncation_commutes_with_products(a in poly_strategy(ctx3(), 5), b in poly_strategy(ctx3(), 5), d in 0u32..8) {
        let full = (&a * &b).truncate(Bank::X, d);
        let cut = (&a.truncate(Bank::X, d) * &b.truncate(Bank::X, d)).truncate(Bank::X, d);
        prop_assert_eq!(&full, &cut);
        prop_assert_eq!(&full, &a.mul_truncated(&b, Bank::X, d).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn determinant_alternates(rows in matrix_strategy(ctx3(), 3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let original = PolyMatrix::new(rows.clone()).unwrap();
        let mut swapped = original.clone();
        swapped.swap_rows(i, j);
        prop_assert_eq!(swapped.determinant(), -original.determinant());
        let mut repeated = rows;
        repeated[j] = repeated[i].clone();
        prop_assert!(det(repeated).is_zero());
    }

    #[test]
    fn minor_expansion_matches_permutation_sum(n in 1usize..=4, seed in matrix_strategy(ctx3(), 4)) {
        let rows: Vec<Vec<Poly>> = seed.into_iter().take(n).map(|r| r.into_iter().take(n).collect()).collect();
        let m = PolyMatrix::new(rows).unwrap();
        prop_assert_eq!(m.determinant(), m.determinant_by_permutations());
    }

    #[test]
    fn schur_is_symmetric_and_homogeneous(lambda in partition_strategy(3, 3)) {
        let ctx = VarContext::x_only(3);
        let s = schur(&lambda, &ctx, Bank::X, SchurMethod::Bialternant).unwrap();
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            prop_assert_eq!(s.swap_vars(a, b), s.clone());
        }
        prop_assert!(s.terms().all(|(m, _)| m.total_degree() == lambda.weight()));
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition_strategy(4, 5)) {
        let back = lambda.conjugate().conjugate();
        prop_assert_eq!(back.with_ambient(4).unwrap(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
    }

    #[test]
    fn wide_window_changes_nothing(lambda in partition_strategy(3, 3), kind in prop::sample::select(vec![FamilyKind::Complete, FamilyKind::Elementary])) {
        let ctx = family_context(3, 2);
        let fam = Family::new(kind, &ctx).unwrap();
        let wide = vec![lambda.largest() + 2; 3];
        prop_assert_eq!(
            family_det(&lambda, &fam, &Window::bounded(&wide)).unwrap(),
            family_det(&lambda, &fam, &Window::unbounded(3)).unwrap()
        );
    }

    #[test]
    fn power_determinant_is_t_homogeneous(lambda in partition_strategy(3, 4)) {
        let ctx = t_context(3, TMode::Distinct);
        let d = power_det(&lambda, &ctx, TMode::Distinct, &Window::unbounded(3)).unwrap();
        let (ts, xs) = (ctx.bank_slots(Bank::T), ctx.bank_slots(Bank::X));
        let graded = d.terms().all(|(m, _)| m.partial_degree(&ts) == lambda.weight() && m.partial_degree(&xs) == 0);
        prop_assert!(graded);
    }
}

#[test]
fn bounded_enumeration_counts() {
    for n in 1..=4usize {
        for a in 0..=4u32 {
            let count = enum_bounded(&vec![a; n]).unwrap().count() as u64;
            assert_eq!(
                count,
                binomial(n as u64 + a as u64, n as u64),
                "n={n} a={a}"
            );
        }
    }
}

#[test]
fn normalization_matches_alternant_sign() {
    let ctx = VarContext::x_only(3);
    for mu in compositions_in_box(&[4, 4, 4]) {
        let alt = alternant(mu.entries(), &ctx, Bank::X).unwrap();
        match normalize(&mu) {
            Normalization::Degenerate => assert!(alt.is_zero(), "mu={mu}"),
            Normalization::Partition { partition, sign } => {
                let base = alternant(partition.parts(), &ctx, Bank::X).unwrap();
                assert_eq!(alt, base.scale(&sign.into()), "mu={mu}");
            }
        }
    }
    // Spot values.
    assert_eq!(
        normalize(&Composition::new(vec![0, 2])),
        Normalization::Partition {
            partition: common::part(&[1, 1]),
            sign: -1
        }
    );
    assert_eq!(
        normalize(&Composition::new(vec![0, 1])),
        Normalization::Degenerate
    );
}

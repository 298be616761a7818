mod common;

use proptest::prelude::*;

use common::catalogue;
use ramify_core::families::*;
use ramify_core::frobenius::*;
use ramify_core::SearchError;

#[test]
fn field_action_rule_agrees_with_search() {
    let mut checked = 0;
    for (q, n) in [
        (2u64, 1u32),
        (3, 1),
        (4, 1),
        (5, 1),
        (7, 1),
        (8, 1),
        (9, 1),
        (2, 2),
        (3, 2),
    ] {
        let qn = q.pow(n);
        assert!(qn * (qn - 1) <= 72);
        let g = field_semidirect(q, n).unwrap();
        for d in 1..=4usize {
            let rule = match field_action_rule(q, n, d) {
                Ok(r) => r,
                Err(SearchError::HypothesisViolated(8)) => continue,
                Err(e) => panic!("{e}"),
            };
            let c = FrobeniusConstraint::new(q, d, false).unwrap();
            let v = search_tuple(&g, &c).unwrap();
            if rule == FieldActionOutcome::Excluded {
                assert_eq!(v.status, TupleStatus::Excluded, "FSD({q},{n}) d={d}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 32);
}

#[test]
fn field_action_rule_hypothesis() {
    assert_eq!(field_action_rule(2, 2, 3), Ok(FieldActionOutcome::Excluded));
    assert_eq!(
        field_action_rule(3, 2, 4),
        Ok(FieldActionOutcome::NotApplicable)
    );
    assert_eq!(
        field_action_rule(8, 1, 1),
        Err(SearchError::HypothesisViolated(8))
    );
    assert_eq!(
        field_action_rule(16, 1, 1),
        Err(SearchError::HypothesisViolated(16))
    );
    assert!(field_action_rule(6, 1, 1).is_err());
}

#[test]
fn dihedral_small_cases() {
    for k in 1..=3usize {
        for q in [2u64, 3, 5] {
            for d in 1..=3 {
                let c = FrobeniusConstraint::new(q, d, false).unwrap();
                let v = search_tuple(&dihedral(4 * k).unwrap(), &c).unwrap();
                assert_eq!(v.status, TupleStatus::Excluded);
            }
        }
    }
}

#[test]
fn budget_exhaustion_is_not_an_exclusion() {
    let g = symmetric(4).unwrap();
    let c = FrobeniusConstraint::new(3, 3, true).unwrap();
    let opts = SearchOptions {
        node_budget: 1,
        ..SearchOptions::default()
    };
    let full = search_tuple(&g, &c).unwrap();
    assert!(full.nodes_visited > 1);
    assert_eq!(
        search_tuple_with(&g, &c, &opts),
        Err(SearchError::SearchBudgetExceeded { budget: 1 })
    );
}

#[test]
fn sequential_and_parallel_agree() {
    let seq = SearchOptions {
        parallel: false,
        ..SearchOptions::default()
    };
    for g in catalogue(16) {
        for q in [2u64, 3] {
            for inf in [false, true] {
                let c = FrobeniusConstraint::new(q, 2, inf).unwrap();
                let a = search_tuple(&g, &c).unwrap();
                let b = search_tuple_with(&g, &c, &seq).unwrap();
                assert_eq!(a.status, b.status, "{}", g.label());
            }
        }
    }
}

fn rotate(t: &FrobeniusTuple, by: usize) -> FrobeniusTuple {
    let mut finite = t.finite_entries.clone();
    finite.rotate_left(by);
    FrobeniusTuple {
        finite_entries: finite,
        infinity_entry: t.infinity_entry,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn witnesses_are_conjugation_invariant(
        idx in 0usize..500,
        qi in 0usize..4,
        d in 1usize..=3,
        inf in any::<bool>(),
        h in 0usize..1000,
    ) {
        let groups = catalogue(24);
        let g = &groups[idx % groups.len()];
        let q = [2u64, 3, 4, 5][qi];
        let c = FrobeniusConstraint::new(q, d, inf).unwrap();
        let v = search_tuple(g, &c).unwrap();
        prop_assert_eq!(v.status == TupleStatus::TuplesExist, v.witness.is_some());
        if let Some(w) = v.witness {
            prop_assert!(verify_tuple(g, &c, &w));
            prop_assert!(verify_tuple(g, &c, &w.conjugated(g, h % g.order())));
        }
    }

    #[test]
    fn exclusions_are_rotation_invariant(
        idx in 0usize..500,
        qi in 0usize..4,
        d in 1usize..=3,
        by in 0usize..3,
    ) {
        // without infinity the product condition is cyclic, so a rotated
        // witness is again a witness; the verdict cannot depend on where the
        // chain starts
        let groups = catalogue(24);
        let g = &groups[idx % groups.len()];
        let q = [2u64, 3, 4, 5][qi];
        let c = FrobeniusConstraint::new(q, d, false).unwrap();
        let v = search_tuple(g, &c).unwrap();
        if let Some(w) = v.witness {
            prop_assert!(verify_tuple(g, &c, &rotate(&w, by % d)));
        }
    }

    #[test]
    fn tampered_tuples_fail_verification(idx in 0usize..500, qi in 0usize..4, x in 0usize..1000) {
        let groups = catalogue(24);
        let g = &groups[idx % groups.len()];
        let q = [2u64, 3, 4, 5][qi];
        let c = FrobeniusConstraint::new(q, 1, true).unwrap();
        let x = x % g.order();
        // x·x ≠ 1 means the product condition fails
        let t = FrobeniusTuple { finite_entries: vec![x], infinity_entry: x };
        if g.mul(x, x) != 0 {
            prop_assert!(!verify_tuple(g, &c, &t));
        }
    }
}

#[test]
fn order_p_entries_are_not_tame() {
    let g = cyclic(3).unwrap();
    let c = FrobeniusConstraint::new(3, 1, true).unwrap();
    let x = g.generator_indices()[0];
    let t = FrobeniusTuple {
        finite_entries: vec![x],
        infinity_entry: g.inverse(x),
    };
    assert!(!verify_tuple(&g, &c, &t));
    // over F_4 the same tuple is tame and x^4 = x fixes its class
    let c4 = FrobeniusConstraint::new(4, 1, true).unwrap();
    assert!(verify_tuple(&g, &c4, &t));
}

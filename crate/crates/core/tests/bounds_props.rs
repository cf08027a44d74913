mod common;

use common::{connected_graph, cubic};
use proptest::prelude::*;
use zforce::bounds::rational::{integer, ratio};
use zforce::bounds::{
    all_entries, bounds_report, cubic_type_bound, entry_holds, nonexceptional_value, regular_girth5_bound,
    regular_girth5_factor, BoundKind, BoundStatus,
};
use zforce::corpus::bundled_corpus;
use zforce::{expected_size, identify_exceptional, NamedFamily};

#[test]
fn sandwich_on_corpus() {
    for c in bundled_corpus().into_iter().filter(|c| c.graph.n() <= 12) {
        let r = bounds_report(&c.graph, true).unwrap();
        let z = r.exact.as_ref().unwrap().value;
        assert!(r.violations.is_empty(), "{}: {:?}", c.name, r.violations);
        for e in r
            .entries
            .iter()
            .filter(|e| e.applicable && e.status == BoundStatus::Proven)
        {
            assert_eq!(entry_holds(e, c.graph.n(), z), Some(true), "{} {}", c.name, e.name);
        }
    }
}

#[test]
fn nonexceptional_bound_holds_exactly_off_the_exceptions() {
    for c in bundled_corpus()
        .into_iter()
        .filter(|c| c.graph.n() <= 12 && c.graph.max_degree() >= 3)
    {
        let g = &c.graph;
        let z = zforce::zero_forcing_number(g, None)
            .unwrap()
            .into_exact()
            .unwrap()
            .value;
        let holds = integer(z) <= nonexceptional_value(g.n(), g.max_degree()).unwrap();
        assert_eq!(holds, identify_exceptional(g).is_none(), "{}", c.name);
    }
}

#[test]
fn exceptions_exceed_by_the_listed_amounts() {
    let cases = [
        (NamedFamily::Complete(4), 3, ratio(2, 1)),
        (NamedFamily::ExceptionalFive, 3, ratio(5, 2)),
        (NamedFamily::ExceptionalSeven, 5, ratio(14, 3)),
        (NamedFamily::CompleteBipartite(3, 3), 4, ratio(3, 1)),
        (NamedFamily::CompleteBipartite(2, 3), 3, ratio(5, 2)),
    ];
    for (fam, z, bound) in cases {
        let g = fam.generate().unwrap();
        assert_eq!(nonexceptional_value(g.n(), g.max_degree()).unwrap(), bound, "{fam}");
        assert_eq!(
            zforce::zero_forcing_number(&g, None)
                .unwrap()
                .into_exact()
                .unwrap()
                .value,
            z
        );
    }
}

#[test]
fn regular_factor_beats_degree_factor() {
    for r in 4..=50 {
        assert!(
            regular_girth5_factor(r).unwrap() < ratio(r as i64 - 2, r as i64 - 1),
            "r = {r}"
        );
    }
}

#[test]
fn type_sum_and_regular_formula_equal_the_expectation() {
    for (i, n) in [10usize, 12, 14, 16, 18, 20].iter().enumerate() {
        for girth in [4, 5] {
            let g = cubic(*n, girth, 100 + i as u64);
            let e = expected_size(&g).unwrap();
            let t = cubic_type_bound(&g).unwrap();
            if t.applicable {
                assert_eq!(t.value.unwrap(), e);
            }
            let reg = regular_girth5_bound(&g).unwrap();
            assert_eq!(reg.applicable, g.girth().is_none_or(|x| x >= 5));
            if reg.applicable {
                assert_eq!(reg.value.unwrap(), e);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn applicable_proven_entries_hold(g in connected_graph(2, 11)) {
        let z = zforce::zero_forcing_number(&g, None).unwrap().into_exact().unwrap().value;
        for e in all_entries(&g).unwrap() {
            prop_assert_eq!(e.value.is_some(), e.applicable, "{}", e.name);
            if e.status == BoundStatus::Proven {
                let held = entry_holds(&e, g.n(), z);
                prop_assert!(held != Some(false), "{} {:?}", e.name, e.kind == BoundKind::Upper);
            }
        }
    }
}

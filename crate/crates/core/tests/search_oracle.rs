//! The search engines against plain subset enumeration.

mod common;

use std::cmp::Ordering;

use common::{angle_sorted_units, certificate_of, naive_general, naive_symmetric, scaled};
use equigon::polygon::{angle_cmp, verify_certificate};
use equigon::{find_zero_sum_general, find_zero_sum_symmetric, LatticeVector, Mode, SearchBudget, SearchOutcome};

const NONEXISTENCE: [(u64, usize); 10] =
    [(7, 3), (7, 5), (11, 3), (11, 5), (5, 3), (5, 5), (1, 3), (1, 5), (2, 3), (2, 5)];

#[test]
fn proven_empty_matches_oracle() {
    for (m, n) in NONEXISTENCE {
        let units = angle_sorted_units(m, 50);
        assert_eq!(naive_general(&scaled(&units), n), None, "m={m} n={n}");
        assert!(!naive_symmetric(&units, n), "m={m} n={n}");
        for mode in [Mode::Symmetric, Mode::General] {
            let b = SearchBudget::new(50, mode);
            let out = match mode {
                Mode::Symmetric => find_zero_sum_symmetric(m, n, &b),
                Mode::General => find_zero_sum_general(m, n, &b),
            }
            .unwrap();
            assert_eq!(out, SearchOutcome::ProvenEmptyWithinN, "m={m} n={n} {mode:?}");
        }
    }
}

#[test]
fn general_search_returns_the_least_solution() {
    let cases = [
        (3, 3, 50),
        (3, 4, 50),
        (3, 5, 20),
        (3, 5, 50),
        (1, 4, 50),
        (2, 4, 50),
        (7, 4, 50),
        (15, 3, 50),
        (15, 5, 40),
        (19, 3, 50),
        (35, 5, 40),
        (7, 7, 14),
    ];
    for (m, n, cap) in cases {
        let units = angle_sorted_units(m, cap);
        let want = naive_general(&scaled(&units), n).map(|idx| certificate_of(m, &units, &idx));
        let out = find_zero_sum_general(m, n, &SearchBudget::new(cap, Mode::General)).unwrap();
        match (&want, &out) {
            (None, SearchOutcome::ProvenEmptyWithinN) => {}
            (Some(c), SearchOutcome::Found { certificate, .. }) => {
                assert_eq!(certificate, c, "m={m} n={n} N={cap}");
                assert!(verify_certificate(certificate).valid);
            }
            _ => panic!("m={m} n={n} N={cap}: oracle {want:?}, search {out}"),
        }
    }
}

#[test]
fn symmetric_search_agrees_with_oracle() {
    for (m, n, cap) in
        [(3, 3, 50), (3, 5, 50), (7, 7, 50), (7, 7, 88), (11, 5, 50), (15, 5, 50), (19, 5, 50), (23, 7, 30)]
    {
        let units = angle_sorted_units(m, cap);
        let want = naive_symmetric(&units, n);
        let out = find_zero_sum_symmetric(m, n, &SearchBudget::new(cap, Mode::Symmetric)).unwrap();
        match &out {
            SearchOutcome::Found { certificate, .. } => {
                assert!(want, "m={m} n={n}: search found {certificate}, oracle did not");
                assert!(verify_certificate(certificate).valid);
                assert_eq!(certificate.n, n);
                let axis = certificate.vectors.iter().filter(|v| v.y.is_zero()).count();
                assert_eq!(axis, 1);
                for v in &certificate.vectors {
                    assert!(certificate.vectors.contains(&LatticeVector { x: v.x.clone(), y: -v.y.clone() }));
                }
            }
            SearchOutcome::ProvenEmptyWithinN => assert!(!want, "m={m} n={n}: oracle found a solution"),
            SearchOutcome::BudgetExhausted => panic!("m={m} n={n}: budget"),
        }
    }
}

#[test]
fn results_do_not_depend_on_jobs() {
    for (m, n, cap, mode) in [
        (3, 7, 60, Mode::General),
        (7, 7, 120, Mode::General),
        (11, 11, 2000, Mode::Symmetric),
        (23, 23, 2000, Mode::Symmetric),
        (3, 9, 40, Mode::General),
    ] {
        let runs: Vec<SearchOutcome> = [1, 2, 3, 8]
            .iter()
            .map(|&jobs| {
                let b = SearchBudget::new(cap, mode).with_jobs(jobs);
                equigon::find_zero_sum(m, n, &b).unwrap()
            })
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "m={m} n={n}: {runs:?}");
        assert!(!matches!(runs[0], SearchOutcome::BudgetExhausted));
    }
}

#[test]
fn tiny_budgets_report_exhaustion() {
    let b = SearchBudget::new(60, Mode::General).with_max_nodes(5);
    assert_eq!(find_zero_sum_general(3, 7, &b).unwrap(), SearchOutcome::BudgetExhausted);
    let b = SearchBudget::new(10_000, Mode::Symmetric).with_max_nodes(5);
    assert_eq!(find_zero_sum_symmetric(7, 7, &b).unwrap(), SearchOutcome::BudgetExhausted);
}

#[test]
fn angle_order_is_strict_on_units() {
    let units = angle_sorted_units(3, 100);
    for w in units.windows(2) {
        let (u, v) = (LatticeVector::new(w[0].a, w[0].b), LatticeVector::new(w[1].a, w[1].b));
        assert_eq!(angle_cmp(&u, &v), Ordering::Less);
    }
}

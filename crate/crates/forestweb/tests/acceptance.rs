//! End-to-end acceptance sweep. Each numbered criterion prints one
//! pass/fail line (run with `--nocapture` to see them); the test fails if
//! any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::rngs::StdRng;
use rand::SeedableRng;

use forestweb::bijection::{deterministic_markers, randomized_markers};
use forestweb::catalan::{
    cyclic_short_arcs, enumerate_tableaux, matching_to_tableau, path_to_tableau,
    tableau_to_matching, tableau_to_path, NoncrossingMatching, Tableau2Col,
};
use forestweb::io::{from_json, to_json, CoreObject};
use forestweb::perm::enumerate_avoiders;
use forestweb::verify::{
    forest_web_count_formula, verify_corollary_decomposition, verify_counts, verify_lemmas,
    verify_theorem,
};
use forestweb::webs::{
    enumerate_forest_webs, is_forest, omega, realize_forest_web, web_to_matching, WebKind,
};
use forestweb::{phi_inverse, pi, pi_inverse, PatternSet, Permutation};

fn tab(col1: &[usize], col2: &[usize]) -> Tableau2Col {
    Tableau2Col::new(col1.to_vec(), col2.to_vec()).unwrap()
}

fn perm(word: &[usize]) -> Permutation {
    Permutation::from_slice(word).unwrap()
}

/// 1. The size-11 worked example of the marker algorithm.
fn golden_pi_example() {
    let t = tab(
        &[1, 2, 4, 5, 6, 10, 13, 14, 16, 17, 21],
        &[3, 7, 8, 9, 11, 12, 15, 18, 19, 20, 22],
    );
    assert_eq!(pi(&t), perm(&[11, 8, 9, 7, 10, 5, 2, 3, 4, 1, 6]));
}

/// 2. Two non-forest size-4 instances: their π images, and the short-arc
///    count that disqualifies them.
fn golden_non_forest_examples() {
    for (t, expected) in [
        (tab(&[1, 3, 5, 7], &[2, 4, 6, 8]), perm(&[4, 3, 2, 1])),
        (tab(&[1, 2, 4, 6], &[3, 5, 7, 8]), perm(&[3, 2, 1, 4])),
    ] {
        assert_eq!(pi(&t), expected);
        let m = tableau_to_matching(&t);
        assert_eq!(cyclic_short_arcs(&m).len(), 4);
        assert!(!is_forest(&m));
    }
}

/// 3. The two size-4 webs with known tableaux: a two-white (cyclic rainbow)
///    web and a three-white web with hourglass multiset {1,1,2}.
fn golden_web_examples() {
    let rainbow = NoncrossingMatching::from_arcs(4, &[(1, 2), (5, 6), (4, 7), (3, 8)]).unwrap();
    let two = realize_forest_web(&rainbow).unwrap();
    assert_eq!(two.white_count(), 2);
    assert_eq!(omega(&two), tab(&[1, 3, 4, 5], &[2, 6, 7, 8]));
    let WebKind::TwoWhite { blocks } = two.kind() else {
        panic!("expected a two-white web")
    };
    assert_eq!(blocks[0].labels(8), vec![6, 7, 8, 1]);
    assert_eq!(blocks[1].labels(8), vec![2, 3, 4, 5]);

    let t = tab(&[1, 3, 5, 6], &[2, 4, 7, 8]);
    let three = realize_forest_web(&tableau_to_matching(&t)).unwrap();
    assert_eq!(three.white_count(), 3);
    assert_eq!(omega(&three), t);
    let WebKind::ThreeWhite { hourglass, .. } = three.kind() else {
        panic!("expected a three-white web")
    };
    let mut sorted = *hourglass;
    sorted.sort_unstable();
    assert_eq!(sorted, [1, 1, 2]);
}

/// 4. Image of Φ equals the avoidance class, with Φ injective, r ≤ 9.
fn theorem_reproduction() {
    let report = verify_theorem(9).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
}

/// 5. All three counts agree with r + 2·C(r,3): 1, 2, 5, ..., 120, 177.
fn count_reproduction() {
    let report = verify_counts(9).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
    let counts: Vec<u64> = (1..=9)
        .map(|r| enumerate_forest_webs(r).unwrap().len() as u64)
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 12, 25, 46, 77, 120, 177]);
    assert_eq!(
        counts,
        (1..=9).map(forest_web_count_formula).collect::<Vec<_>>()
    );
}

/// 6. Arc/diagonal equivalence and southeast chains, exhaustively.
fn lemma_suite() {
    let report = verify_lemmas(10).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
}

/// 7. Every conversion and its inverse, over the full domains for r ≤ 9.
fn round_trip_suite() {
    for r in 1..=9 {
        for t in enumerate_tableaux(r).unwrap() {
            let p = tableau_to_path(&t);
            assert_eq!(path_to_tableau(&p), t);
            let m = tableau_to_matching(&t);
            assert_eq!(matching_to_tableau(&m), t);
            assert_eq!(pi_inverse(&pi(&t)).unwrap(), t);
            for obj in [
                CoreObject::Tableau(t.clone()),
                CoreObject::Path(p),
                CoreObject::Matching(m),
            ] {
                assert_eq!(from_json(&to_json(&obj)).unwrap(), obj);
            }
        }
        for w in enumerate_forest_webs(r).unwrap() {
            assert_eq!(realize_forest_web(&web_to_matching(&w)).unwrap(), w);
            assert_eq!(phi_inverse(&forestweb::phi(&w)).unwrap(), w);
            let obj = CoreObject::Web(w);
            assert_eq!(from_json(&to_json(&obj)).unwrap(), obj);
        }
        for v in enumerate_avoiders(r, &PatternSet::av_132()).unwrap() {
            assert_eq!(pi(&pi_inverse(&v).unwrap()), v);
            let obj = CoreObject::Permutation(v);
            assert_eq!(from_json(&to_json(&obj)).unwrap(), obj);
        }
    }
}

/// 8. Split-at-maximum decomposition and per-position census, r ≤ 8.
fn corollary_decomposition() {
    let report = verify_corollary_decomposition(8).unwrap();
    assert!(report.passed(), "{:?}", report.failures);
}

/// 9. Randomized marker placement is confluent with the deterministic scan.
fn marker_confluence() {
    for seed in 0..50u64 {
        let mut rng = StdRng::seed_from_u64(seed);
        for r in 1..=7 {
            for t in enumerate_tableaux(r).unwrap() {
                let path = tableau_to_path(&t);
                assert_eq!(
                    randomized_markers(&path, &mut rng),
                    deterministic_markers(&path),
                    "seed {seed}, tableau {t}"
                );
            }
        }
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn()); 9] = [
        ("golden pi example", golden_pi_example),
        ("golden non-forest examples", golden_non_forest_examples),
        ("golden web examples", golden_web_examples),
        ("theorem reproduction", theorem_reproduction),
        ("count reproduction", count_reproduction),
        ("lemma suite", lemma_suite),
        ("round-trip suite", round_trip_suite),
        ("corollary decomposition", corollary_decomposition),
        ("marker confluence", marker_confluence),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run));
        println!(
            "criterion {}: {:<28} {}",
            i + 1,
            name,
            if outcome.is_ok() { "pass" } else { "FAIL" }
        );
        if outcome.is_err() {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

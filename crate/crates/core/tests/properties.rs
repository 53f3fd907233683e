use std::collections::BTreeSet;

use proptest::prelude::*;
use sumset_core::engine::{self, Limits};
use sumset_core::theorems;
use sumset_core::{IntegerSet, Structure};

/// Independent reference for `h±A`: recursion over elements, choosing a
/// signed coefficient for each, written without any shared code.
fn brute_signed(a: &[i64], h: i64) -> BTreeSet<i64> {
    fn go(a: &[i64], left: i64, acc: i64, out: &mut BTreeSet<i64>) {
        match a.split_first() {
            None => {
                if left == 0 {
                    out.insert(acc);
                }
            }
            Some((&x, rest)) => {
                for lam in -left..=left {
                    go(rest, left - lam.abs(), acc + lam * x, out);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    go(a, h, 0, &mut out);
    out
}

fn set_strategy(max_k: usize, m: i64) -> impl Strategy<Value = IntegerSet> {
    proptest::collection::btree_set(-m..=m, 1..=max_k)
        .prop_map(|s| IntegerSet::normalize(s).unwrap())
}

fn signed(a: &IntegerSet, h: u32) -> IntegerSet {
    engine::signed_sumset(a, h).unwrap()
}

#[test]
fn derived_examples_against_brute_force() {
    let check = |a: &[i64], h: u32| {
        let want: Vec<i64> = brute_signed(a, h as i64).into_iter().collect();
        let got = signed(&IntegerSet::normalize(a.iter().copied()).unwrap(), h);
        assert_eq!(got.elements(), &want[..], "A={a:?} h={h}");
        want
    };
    assert_eq!(check(&[1, 2], 3), vec![-6, -5, -4, -3, 0, 3, 4, 5, 6]);
    assert_eq!(check(&[2, 23], 5).len(), 20);
    assert_eq!(check(&[-3, 0, 3], 3).len(), 7);
    // The three k=2 inputs known to fall below 2hk-h+1 (10, 13, 16).
    assert_eq!(check(&[1, 3], 4).len(), 11);
    assert_eq!(check(&[2, 3], 5).len(), 15);
}

#[test]
fn plain_sumset_derived_example() {
    // All 6 unordered pairs with repetition from {1,2,4}.
    let a = [1i64, 2, 4];
    let mut want = BTreeSet::new();
    for i in 0..3 {
        for j in i..3 {
            want.insert(a[i] + a[j]);
        }
    }
    let got = engine::sumset(&IntegerSet::normalize(a).unwrap(), 2).unwrap();
    assert_eq!(got.elements(), &want.into_iter().collect::<Vec<_>>()[..]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dp_matches_brute_force(a in set_strategy(5, 20), h in 1u32..=5) {
        let want: Vec<i64> = brute_signed(a.elements(), h as i64).into_iter().collect();
        let got = signed(&a, h);
        prop_assert_eq!(got.elements(), &want[..]);
    }

    #[test]
    fn naive_matches_dp(a in set_strategy(5, 40), h in 1u32..=5) {
        prop_assert_eq!(engine::signed_sumset_naive(&a, h).unwrap(), signed(&a, h));
    }

    #[test]
    fn wide_range_dp_matches_naive(a in set_strategy(4, 5000), h in 1u32..=4) {
        prop_assert_eq!(engine::signed_sumset_naive(&a, h).unwrap(), signed(&a, h));
    }

    #[test]
    fn containment_chain(a in set_strategy(5, 12), h in 1u32..=5) {
        let s = signed(&a, h);
        let plus = engine::sumset(&a, h).unwrap();
        let minus = engine::sumset(&a.negate().unwrap(), h).unwrap();
        let upper = engine::sumset(&engine::union_with_negation(&a).unwrap(), h).unwrap();
        for x in plus.elements().iter().chain(minus.elements()) {
            prop_assert!(s.contains(*x));
        }
        for x in s.elements() {
            prop_assert!(upper.contains(*x));
        }
    }

    #[test]
    fn negation_symmetry(a in set_strategy(5, 12), h in 1u32..=5) {
        let s = signed(&a, h);
        prop_assert_eq!(s.negate().unwrap(), s.clone());
        prop_assert_eq!(signed(&a.negate().unwrap(), h), s);
    }

    #[test]
    fn dilation_identity(a in set_strategy(5, 12), h in 1u32..=5, alpha in prop_oneof![-3i64..=-1, 1i64..=3]) {
        prop_assert_eq!(
            signed(&a.dilate(alpha).unwrap(), h),
            signed(&a, h).dilate(alpha).unwrap()
        );
    }

    #[test]
    fn result_within_radius(a in set_strategy(5, 12), h in 1u32..=5) {
        let s = signed(&a, h);
        let r = h as i64 * a.max_abs() as i64;
        prop_assert!(s.min_element() >= -r && s.max_element() <= r);
    }

    #[test]
    fn odd_elements_parity(
        odd in proptest::collection::btree_set(-6i64..=5, 1..=5),
        h in 1u32..=5,
    ) {
        let a = IntegerSet::normalize(odd.into_iter().map(|x| 2 * x + 1)).unwrap();
        let want = i64::from(h % 2);
        prop_assert!(signed(&a, h).elements().iter().all(|x| x.rem_euclid(2) == want));
    }

    #[test]
    fn classify_under_negation(a in set_strategy(6, 30)) {
        // {0} is NonnegWithZero and its own mirror image.
        prop_assume!(a.elements() != [0]);
        prop_assert_eq!(a.negate().unwrap().classify(), a.classify().negated());
    }

    #[test]
    fn structure_dilation_covariant(a in set_strategy(5, 12), m in 1i64..=6) {
        let scaled = a.dilate(m).unwrap().detect_structure();
        match a.detect_structure() {
            Structure::OddApDilate { d } => {
                prop_assert_eq!(scaled, Structure::OddApDilate { d: d * m as u64 })
            }
            Structure::IntervalDilate { d } => {
                prop_assert_eq!(scaled, Structure::IntervalDilate { d: d * m as u64 })
            }
            other => prop_assert_eq!(scaled.kind(), other.kind()),
        }
    }

    #[test]
    fn symmetric_ap_by_brute_comparison(a in set_strategy(5, 8)) {
        let mirrored: BTreeSet<i64> = a.elements().iter().map(|x| -x).collect();
        let own: BTreeSet<i64> = a.elements().iter().copied().collect();
        let steps: BTreeSet<i64> = a.elements().windows(2).map(|w| w[1] - w[0]).collect();
        let is_ap = a.len() >= 2 && steps.len() == 1;
        let is_sym_ap = mirrored == own && is_ap;
        let detected = matches!(a.detect_structure(), Structure::SymmetricAp { .. });
        prop_assert_eq!(detected, is_sym_ap);
    }

    #[test]
    fn direct_bound_never_violated(a in set_strategy(5, 12), h in 1u32..=5) {
        let r = theorems::check_direct(&a, h, &Limits::default()).unwrap();
        prop_assert!(!r.violates_bound(), "{:?}", r);
        prop_assert_eq!(r.tight, r.cardinality == r.bound);
    }
}

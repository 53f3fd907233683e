//! Exhaustive verification over enumerated set families.
//!
//! Sets are evaluated in parallel on the current rayon pool; results are
//! merged in enumeration order, so output never depends on scheduling.

mod family;
mod predicate;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use family::{enumerate_family, FamilySpec};
pub use predicate::{Observation, PredicateId, Witness};

use crate::engine::Limits;
use crate::error::{Error, Result};
use crate::set::IntegerSet;
use crate::theorems::{self, DirectReport, InverseVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Witnesses kept per predicate; the violation count stays exact.
    pub witness_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            limits: Limits::default(),
            witness_cap: 100,
        }
    }
}

/// Smallest `|h±A|` seen over even-size mixed-sign sets, for one `(k, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenKMinimum {
    pub k: usize,
    pub h: u32,
    pub min_cardinality: u64,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub predicate: PredicateId,
    /// `(A, h)` pairs the predicate applied to.
    pub sets_checked: u64,
    pub violation_count: u64,
    /// The first `witness_cap` violations, in enumeration order.
    pub violations: Vec<Witness>,
    pub tight_count: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub even_k_minima: Vec<EvenKMinimum>,
    /// Wall-clock time; not serialized so summaries stay reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    tight: u64,
    violations: u64,
    witnesses: Vec<Witness>,
    even_k: BTreeMap<(usize, u32), u64>,
}

fn evaluate_set(
    p: PredicateId,
    set: &IntegerSet,
    spec: &FamilySpec,
    limits: &Limits,
) -> Result<Tally> {
    let mut t = Tally::default();
    for h in spec.h_range.clone() {
        let out = predicate::evaluate(p, set, h, limits).map_err(|e| e.at(set.elements(), h))?;
        t.checked += u64::from(out.checked);
        t.tight += u64::from(out.tight);
        if let Some(w) = out.witness {
            t.violations += 1;
            t.witnesses.push(w);
        }
        if let Some(c) = out.even_k_cardinality {
            t.even_k.insert((set.len(), h), c);
        }
    }
    Ok(t)
}

/// Evaluates `predicate` on every `(A, h)` in the family.
pub fn verify(
    predicate: PredicateId,
    spec: &FamilySpec,
    options: &VerifyOptions,
) -> Result<VerificationSummary> {
    let start = Instant::now();
    let sets = enumerate_family(spec, &options.limits)?;
    let tallies: Vec<Result<Tally>> = sets
        .par_iter()
        .map(|s| evaluate_set(predicate, s, spec, &options.limits))
        .collect();

    let mut total = Tally::default();
    for t in tallies {
        let t = t?;
        total.checked += t.checked;
        total.tight += t.tight;
        total.violations += t.violations;
        let room = options.witness_cap.saturating_sub(total.witnesses.len());
        total.witnesses.extend(t.witnesses.into_iter().take(room));
        for (key, c) in t.even_k {
            total
                .even_k
                .entry(key)
                .and_modify(|m| *m = (*m).min(c))
                .or_insert(c);
        }
    }

    Ok(VerificationSummary {
        predicate,
        sets_checked: total.checked,
        violation_count: total.violations,
        violations: total.witnesses,
        tight_count: total.tight,
        even_k_minima: total
            .even_k
            .into_iter()
            .map(|((k, h), min_cardinality)| EvenKMinimum {
                k,
                h,
                min_cardinality,
                bound: theorems::plain_bound(k, h),
            })
            .collect(),
        runtime: start.elapsed(),
    })
}

/// One predicate paired with the family it runs over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannedCheck {
    pub predicate: PredicateId,
    pub family: FamilySpec,
}

/// Every predicate over the default corpus: all subsets of `[-12, 12]`
/// with `1 <= k <= 5` and `1 <= h <= 5`, each restricted to the ranges its
/// hypotheses require.
pub fn standard_plan() -> Vec<PlannedCheck> {
    use crate::set::CaseTag::*;
    use PredicateId as P;
    const M: i64 = 12;
    let check = |predicate, k: RangeInclusive<usize>, h: RangeInclusive<u32>, case| PlannedCheck {
        predicate,
        family: FamilySpec::new(k, M, h, case),
    };
    vec![
        check(P::OracleEq, 1..=5, 1..=5, None),
        check(P::ThmA, 1..=5, 2..=5, None),
        check(P::ThmB, 1..=5, 2..=5, None),
        check(P::T1, 1..=5, 1..=5, Some(PositiveOnly)),
        check(P::T1, 1..=5, 1..=5, Some(NegativeOnly)),
        check(P::T2, 2..=5, 2..=5, Some(PositiveOnly)),
        check(P::T3, 3..=5, 3..=5, Some(PositiveOnly)),
        check(P::T3, 3..=5, 3..=5, Some(NegativeOnly)),
        check(P::T4, 3..=5, 3..=5, Some(PositiveOnly)),
        check(P::T5, 1..=5, 1..=5, Some(NonnegWithZero)),
        check(P::T5, 2..=5, 1..=5, Some(NonposWithZero)),
        check(P::T6, 2..=5, 2..=5, Some(NonnegWithZero)),
        check(P::T7, 2..=5, 1..=5, Some(MixedSign)),
        check(P::T8, 2..=5, 1..=5, Some(MixedSign)),
        check(P::RemarkK2, 2..=2, 3..=5, Some(PositiveOnly)),
        check(P::Containment, 1..=5, 1..=5, None),
        check(P::Dilation, 1..=5, 1..=5, None),
        check(P::Negation, 1..=5, 1..=5, None),
        check(P::Parity, 1..=5, 1..=5, None),
    ]
}

/// Runs every check of a plan in order.
pub fn run_plan(plan: &[PlannedCheck], options: &VerifyOptions) -> Result<Vec<VerificationSummary>> {
    plan.iter()
        .map(|c| verify(c.predicate, &c.family, options))
        .collect()
}

/// A set attaining its direct bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightSet {
    pub set: IntegerSet,
    pub cardinality: u64,
    pub bound: u64,
    /// `None` when no inverse result covers the set.
    pub verdict: Option<InverseVerdict>,
}

/// Every set in the family whose direct report at `h` is tight, with its
/// inverse verdict. The family's own `h_range` is ignored.
pub fn scan_tight_sets(spec: &FamilySpec, h: u32, limits: &Limits) -> Result<Vec<TightSet>> {
    if h == 0 {
        return Err(Error::ZeroH);
    }
    let sets = enumerate_family(spec, limits)?;
    let found: Vec<Result<Option<TightSet>>> = sets
        .par_iter()
        .map(|s| {
            let scan = || -> Result<Option<TightSet>> {
                let report: DirectReport = theorems::check_direct(s, h, limits)?;
                if !report.tight {
                    return Ok(None);
                }
                Ok(Some(TightSet {
                    set: s.clone(),
                    cardinality: report.cardinality,
                    bound: report.bound,
                    verdict: theorems::inverse_verdict(&report)?,
                }))
            };
            scan().map_err(|e| e.at(s.elements(), h))
        })
        .collect();
    let mut out = Vec::new();
    for f in found {
        out.extend(f?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::{CaseTag, Structure};
    use crate::theorems::TheoremId;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn t5_small_family_passes() {
        let spec = FamilySpec::new(2..=4, 8, 1..=4, Some(CaseTag::NonnegWithZero));
        let s = verify(PredicateId::T5, &spec, &opts()).unwrap();
        assert!(s.passed());
        assert_eq!(s.violations, vec![]);
        assert!(s.sets_checked > 0 && s.tight_count > 0);
    }

    #[test]
    fn t3_probe_on_k2_finds_counterexamples() {
        let spec = FamilySpec::new(2..=2, 2, 3..=3, Some(CaseTag::PositiveOnly));
        let s = verify(PredicateId::T3, &spec, &opts()).unwrap();
        assert_eq!(s.violation_count, 1);
        let w = &s.violations[0];
        assert_eq!(w.set.elements(), &[1, 2]);
        assert_eq!((w.expected.clone(), w.actual.clone()), (Observation::Count(10), Observation::Count(9)));
    }

    #[test]
    fn dilation_and_negation_hold() {
        let spec = FamilySpec::new(1..=3, 4, 1..=3, None);
        for p in [PredicateId::Dilation, PredicateId::Negation, PredicateId::Containment] {
            assert!(verify(p, &spec, &opts()).unwrap().passed(), "{p}");
        }
    }

    #[test]
    fn witness_cap_keeps_exact_count() {
        let spec = FamilySpec::new(4..=4, 5, 1..=1, Some(CaseTag::MixedSign));
        let uncapped = verify(PredicateId::T8Literal, &spec, &opts()).unwrap();
        assert!(uncapped.violation_count > 2);
        let capped = verify(
            PredicateId::T8Literal,
            &spec,
            &VerifyOptions {
                witness_cap: 2,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(capped.violation_count, uncapped.violation_count);
        assert_eq!(capped.violations, uncapped.violations[..2]);
    }

    #[test]
    fn errors_carry_location() {
        let spec = FamilySpec::new(3..=3, 4, 6..=6, None);
        let o = VerifyOptions {
            limits: Limits {
                naive_budget: 100,
                ..Limits::default()
            },
            ..opts()
        };
        let err = verify(PredicateId::OracleEq, &spec, &o).unwrap_err();
        match err {
            Error::At { set, h, source } => {
                assert_eq!((set, h), (vec![-4, -3, -2], 6));
                assert!(matches!(*source, Error::BudgetExceeded { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scan_positive_k3_h2() {
        let spec = FamilySpec::new(3..=3, 12, 1..=1, Some(CaseTag::PositiveOnly));
        let found = scan_tight_sets(&spec, 2, &Limits::default()).unwrap();
        let sets: Vec<Vec<i64>> = found.iter().map(|t| t.set.elements().to_vec()).collect();
        assert_eq!(sets, vec![vec![1, 3, 5], vec![2, 6, 10]]);
        for t in &found {
            let v = t.verdict.as_ref().unwrap();
            assert_eq!(v.theorem, TheoremId::T2);
            assert!(v.matches_theorem);
        }
    }

    #[test]
    fn scan_zero_k3_h3() {
        let spec = FamilySpec::new(3..=3, 6, 1..=1, Some(CaseTag::NonnegWithZero));
        let found = scan_tight_sets(&spec, 3, &Limits::default()).unwrap();
        let sets: Vec<Vec<i64>> = found.iter().map(|t| t.set.elements().to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 2, 4], vec![0, 3, 6]]);
        assert!(found.iter().all(|t| t.verdict.as_ref().unwrap().matches_theorem));
    }

    #[test]
    fn scan_mixed_k3_h2() {
        let spec = FamilySpec::new(3..=3, 4, 1..=1, Some(CaseTag::MixedSign));
        let found = scan_tight_sets(&spec, 2, &Limits::default()).unwrap();
        for d in 1..=4i64 {
            assert!(found.iter().any(|t| t.set.elements() == [-d, 0, d]), "d={d}");
        }
        for t in &found {
            let v = t.verdict.as_ref().unwrap();
            assert!(matches!(v.observed_structure, Structure::SymmetricAp { .. }));
            assert!(v.matches_theorem);
        }
    }
}

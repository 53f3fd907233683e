//! Lower bounds on `|h±A|` for each sign regime, the structural
//! characterizations of the sets attaining them, and constructors for the
//! extremal families.
//!
//! Negative-only and nonpositive-with-zero sets are handled through
//! `A ↦ -A`, using `|h±(-A)| = |h±A|`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{self, Limits};
use crate::error::{Error, Result};
use crate::set::{CaseTag, IntegerSet, Structure};

/// Identifiers for the direct and inverse results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T1" => TheoremId::T1,
            "T2" => TheoremId::T2,
            "T3" => TheoremId::T3,
            "T4" => TheoremId::T4,
            "T5" => TheoremId::T5,
            "T6" => TheoremId::T6,
            "T7" => TheoremId::T7,
            "T8" => TheoremId::T8,
            other => return Err(Error::UnknownPredicate(other.to_string())),
        })
    }
}

/// `hk - h + 1`: the classical bound on `|hA|`, and the mixed-sign bound
/// on `|h±A|`.
pub fn plain_bound(k: usize, h: u32) -> u64 {
    let (k, h) = (k as u64, u64::from(h));
    h.saturating_mul(k) - h + 1
}

/// `2(hk - h + 1)`, valid for every positive-only set.
pub fn positive_bound(k: usize, h: u32) -> u64 {
    plain_bound(k, h).saturating_mul(2)
}

/// `2hk - h + 1`, valid for positive-only sets when `h >= 3` and `k >= 3`.
pub fn positive_bound_strong(k: usize, h: u32) -> u64 {
    let (k, h) = (k as u64, u64::from(h));
    h.saturating_mul(k).saturating_mul(2) - h + 1
}

/// `2hk - 2h + 1`, valid for nonnegative sets containing zero.
pub fn zero_bound(k: usize, h: u32) -> u64 {
    let (k, h) = (k as u64, u64::from(h));
    h.saturating_mul(k).saturating_mul(2) - 2 * h + 1
}

/// The bound on `|h±A|` for a set of size `k` in `case`, and which result
/// supplies it.
pub fn applicable_bound(case: CaseTag, k: usize, h: u32) -> (TheoremId, u64) {
    match case.reduced() {
        CaseTag::PositiveOnly if h >= 3 && k >= 3 => (TheoremId::T3, positive_bound_strong(k, h)),
        CaseTag::PositiveOnly => (TheoremId::T1, positive_bound(k, h)),
        CaseTag::NonnegWithZero => (TheoremId::T5, zero_bound(k, h)),
        CaseTag::MixedSign => (TheoremId::T7, plain_bound(k, h)),
        CaseTag::NegativeOnly | CaseTag::NonposWithZero => unreachable!("reduced"),
    }
}

pub fn lower_bound(case: CaseTag, k: usize, h: u32) -> u64 {
    applicable_bound(case, k, h).1
}

/// Exact `|h±{a0, a1}|` for `0 < a0 < a1` and `h >= 3` when
/// `h < (a0 + a1) / (2 a0)`; `None` when that condition fails or the
/// arguments are out of range. `4h` is an upper bound for every pair.
pub fn remark_k2_prediction(a0: i64, a1: i64, h: u32) -> Option<u64> {
    if !(0 < a0 && a0 < a1 && h >= 3) {
        return None;
    }
    let lhs = 2 * i128::from(h) * i128::from(a0);
    (lhs < i128::from(a0) + i128::from(a1)).then(|| 4 * u64::from(h))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectReport {
    pub set: IntegerSet,
    pub h: u32,
    pub case: CaseTag,
    pub theorem: TheoremId,
    pub bound: u64,
    pub cardinality: u64,
    pub tight: bool,
}

impl DirectReport {
    pub fn from_cardinality(set: &IntegerSet, h: u32, cardinality: u64) -> Self {
        let case = set.classify();
        let (theorem, bound) = applicable_bound(case, set.len(), h);
        Self {
            set: set.clone(),
            h,
            case,
            theorem,
            bound,
            cardinality,
            tight: cardinality == bound,
        }
    }

    /// True when the computed cardinality falls below the bound.
    pub fn violates_bound(&self) -> bool {
        self.cardinality < self.bound
    }
}

/// Computes `|h±A|` and compares it with the applicable bound.
pub fn check_direct(a: &IntegerSet, h: u32, limits: &Limits) -> Result<DirectReport> {
    let card = engine::signed_sumset_with(a, h, limits)?.len() as u64;
    Ok(DirectReport::from_cardinality(a, h, card))
}

/// Outcome of comparing a tight set with the structure an inverse result
/// predicts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseVerdict {
    pub theorem: TheoremId,
    pub matches_theorem: bool,
    pub expected_structure: Structure,
    /// Structure of the set after negation reduction.
    pub observed_structure: Structure,
    /// False only for the mixed-sign `h = 1` case, where just the symmetry
    /// `a_i = -a_{k-1-i}` is required.
    pub ap_required: bool,
}

/// Inverse verdict for a set whose direct report is already known.
///
/// Returns `None` when the report is not tight or no inverse result speaks
/// to the regime (`k < 2`, or `h = 1` outside the mixed-sign case).
pub fn inverse_verdict(report: &DirectReport) -> Result<Option<InverseVerdict>> {
    if !report.tight || report.set.len() < 2 {
        return Ok(None);
    }
    let b = if report.case.is_reduced_by_negation() {
        report.set.negate()?
    } else {
        report.set.clone()
    };
    let e = b.elements();
    let (h, k) = (report.h, b.len());
    let observed = b.detect_structure();
    let first_gap = u64::try_from(i128::from(e[1]) - i128::from(e[0])).unwrap_or(u64::MAX);

    let verdict = match report.case.reduced() {
        CaseTag::PositiveOnly => {
            if h < 2 {
                return Ok(None);
            }
            let expected = Structure::OddApDilate { d: e[0] as u64 };
            // Tight with h >= 3 and k = 2 can only be at 2(hk-h+1), which
            // contradicts the `h = 2` conclusion outright.
            let theorem = if h >= 3 && k >= 3 { TheoremId::T4 } else { TheoremId::T2 };
            let matches = observed == expected && (theorem == TheoremId::T4 || h == 2);
            InverseVerdict {
                theorem,
                matches_theorem: matches,
                expected_structure: expected,
                observed_structure: observed,
                ap_required: true,
            }
        }
        CaseTag::NonnegWithZero => {
            if h < 2 {
                return Ok(None);
            }
            let expected = Structure::IntervalDilate { d: first_gap };
            InverseVerdict {
                theorem: TheoremId::T6,
                matches_theorem: observed == expected,
                expected_structure: expected,
                observed_structure: observed,
                ap_required: true,
            }
        }
        CaseTag::MixedSign => {
            let expected = Structure::SymmetricAp {
                d: first_gap,
                first: e[0],
            };
            let ap_required = h >= 2;
            let matches = if ap_required {
                observed == expected
            } else {
                b.is_symmetric()
            };
            InverseVerdict {
                theorem: TheoremId::T8,
                matches_theorem: matches,
                expected_structure: expected,
                observed_structure: observed,
                ap_required,
            }
        }
        CaseTag::NegativeOnly | CaseTag::NonposWithZero => unreachable!("reduced"),
    };
    Ok(Some(verdict))
}

/// Computes the direct report and, when tight, the inverse verdict.
pub fn check_inverse(a: &IntegerSet, h: u32, limits: &Limits) -> Result<Option<InverseVerdict>> {
    inverse_verdict(&check_direct(a, h, limits)?)
}

/// The extremal set for `case`: `d*{1,3,...,2k-1}`, `d*[0,k-1]` or
/// `d*[-⌊k/2⌋, ⌊k/2⌋]`. Negative regimes return the mirror image.
pub fn construct_extremal(case: CaseTag, k: usize, h: u32, d: u64) -> Result<IntegerSet> {
    if k == 0 || h == 0 || d == 0 {
        return Err(Error::UnsupportedParameters(format!(
            "k, h and d must all be positive (k={k}, h={h}, d={d})"
        )));
    }
    let base: Vec<i64> = match case {
        CaseTag::PositiveOnly | CaseTag::NegativeOnly => (0..k as i64).map(|i| 2 * i + 1).collect(),
        CaseTag::NonnegWithZero => (0..k as i64).collect(),
        CaseTag::NonposWithZero if k < 2 => {
            return Err(Error::UnsupportedParameters(
                "a nonpositive set containing zero needs k >= 2".into(),
            ))
        }
        CaseTag::NonposWithZero => (0..k as i64).collect(),
        CaseTag::MixedSign if k < 3 || k % 2 == 0 => {
            return Err(Error::UnsupportedParameters(format!(
                "the mixed-sign interval construction needs odd k >= 3, got k={k}"
            )))
        }
        CaseTag::MixedSign => {
            let half = (k / 2) as i64;
            (-half..=half).collect()
        }
    };
    let d = i64::try_from(d).map_err(|_| Error::Overflow(format!("dilation factor {d}")))?;
    let alpha = if matches!(case, CaseTag::NegativeOnly | CaseTag::NonposWithZero) {
        d.checked_neg().ok_or_else(|| Error::Overflow(format!("-{d}")))?
    } else {
        d
    };
    IntegerSet::normalize(base)?.dilate(alpha)
}

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::engine::{binomial, Limits};
use crate::error::{Error, Result};
use crate::set::{CaseTag, IntegerSet};

/// A family of sets: every subset of `[-M, M]` whose size lies in
/// `k_range`, optionally restricted to one sign regime, paired with every
/// `h` in `h_range`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub k_range: RangeInclusive<usize>,
    pub element_bound: i64,
    pub h_range: RangeInclusive<u32>,
    pub case_filter: Option<CaseTag>,
}

impl FamilySpec {
    pub fn new(
        k_range: RangeInclusive<usize>,
        element_bound: i64,
        h_range: RangeInclusive<u32>,
        case_filter: Option<CaseTag>,
    ) -> Self {
        Self {
            k_range,
            element_bound,
            h_range,
            case_filter,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFamily(m));
        if self.k_range.is_empty() || *self.k_range.start() == 0 {
            return bad(format!("k range {:?} must be non-empty and start at 1 or more", self.k_range));
        }
        if self.h_range.is_empty() || *self.h_range.start() == 0 {
            return bad(format!("h range {:?} must be non-empty and start at 1 or more", self.h_range));
        }
        if self.element_bound < 1 {
            return bad(format!("element bound must be at least 1, got {}", self.element_bound));
        }
        if self.element_bound > (1 << 40) {
            return bad(format!("element bound {} is unreasonably large", self.element_bound));
        }
        Ok(())
    }

    /// Number of subsets of `[-M, M]` with size in `k_range`, before the
    /// case filter.
    pub fn candidate_count(&self) -> u128 {
        let n = 2 * self.element_bound as u128 + 1;
        self.k_range
            .clone()
            .map(|k| binomial(n, k as u128))
            .fold(0, u128::saturating_add)
    }
}

/// Every set in the family, ordered by `k` and then lexicographically.
pub fn enumerate_family(spec: &FamilySpec, limits: &Limits) -> Result<Vec<IntegerSet>> {
    spec.validate()?;
    let count = spec.candidate_count();
    if count > limits.family_budget {
        return Err(Error::BudgetExceeded {
            what: "set family",
            count,
            budget: limits.family_budget,
        });
    }
    let m = spec.element_bound;
    let mut out = Vec::new();
    for k in spec.k_range.clone() {
        match spec.case_filter {
            None => combinations(&(-m..=m).collect::<Vec<_>>(), k, &mut |c| {
                out.push(IntegerSet::from_sorted(c.to_vec()))
            }),
            Some(CaseTag::PositiveOnly) => out.extend(positive(m, k)),
            Some(CaseTag::NonnegWithZero) => out.extend(with_zero(m, k)),
            Some(CaseTag::MixedSign) => combinations(&(-m..=m).collect::<Vec<_>>(), k, &mut |c| {
                if c[0] < 0 && c[k - 1] > 0 {
                    out.push(IntegerSet::from_sorted(c.to_vec()));
                }
            }),
            // Mirror images of the positive regimes.
            Some(CaseTag::NegativeOnly) => out.extend(mirrored(positive(m, k))),
            Some(CaseTag::NonposWithZero) if k >= 2 => out.extend(mirrored(with_zero(m, k))),
            Some(CaseTag::NonposWithZero) => {}
        }
    }
    Ok(out)
}

fn positive(m: i64, k: usize) -> Vec<IntegerSet> {
    let mut v = Vec::new();
    combinations(&(1..=m).collect::<Vec<_>>(), k, &mut |c| {
        v.push(IntegerSet::from_sorted(c.to_vec()))
    });
    v
}

fn with_zero(m: i64, k: usize) -> Vec<IntegerSet> {
    let mut v = Vec::new();
    combinations(&(1..=m).collect::<Vec<_>>(), k - 1, &mut |c| {
        let mut e = Vec::with_capacity(k);
        e.push(0);
        e.extend_from_slice(c);
        v.push(IntegerSet::from_sorted(e));
    });
    v
}

fn mirrored(sets: Vec<IntegerSet>) -> Vec<IntegerSet> {
    let mut v: Vec<IntegerSet> = sets
        .iter()
        .map(|s| s.negate().expect("family elements are small"))
        .collect();
    v.sort();
    v
}

/// Calls `visit` on each `k`-subset of `pool` (assumed increasing), in
/// lexicographic order.
fn combinations(pool: &[i64], k: usize, visit: &mut impl FnMut(&[i64])) {
    let n = pool.len();
    if k > n {
        return;
    }
    if k == 0 {
        visit(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<i64> = idx.iter().map(|&i| pool[i]).collect();
    loop {
        visit(&buf);
        // Rightmost index that can still advance.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..k {
            buf[j] = pool[idx[j]];
        }
    }
}

//! Plain and signed h-fold sumsets, plus a brute-force oracle for the
//! signed case.
//!
//! The signed sumset `h±A` is the set of `Σ λ_i a_i` over integer vectors
//! with `Σ |λ_i| = h`. Each element carries a single signed coefficient, so
//! it is *not* the h-fold sumset of `A ∪ -A`: that larger set admits
//! `a_i + (-a_i)` at weight two. The DP below processes one element at a
//! time and tracks the weight spent so far.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::set::IntegerSet;

/// Resource caps for the engine and the enumeration harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `(h+1) * (2hM+1)` bits a DP table may occupy.
    pub dp_bit_cap: u128,
    /// Maximum number of coefficient vectors the naive oracle may visit.
    pub naive_budget: u128,
    /// Maximum number of candidate subsets a family may enumerate.
    pub family_budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            dp_bit_cap: 1 << 31,
            naive_budget: 10_000_000,
            family_budget: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "DP")]
    Dp,
    Naive,
}

/// A computed signed sumset together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetOutcome {
    pub input: IntegerSet,
    pub h: u32,
    pub result: IntegerSet,
    pub method: Method,
}

/// Computes `h±A` with the chosen method.
pub fn compute(a: &IntegerSet, h: u32, method: Method, limits: &Limits) -> Result<SumsetOutcome> {
    let result = match method {
        Method::Dp => signed_sumset_with(a, h, limits)?,
        Method::Naive => signed_sumset_naive_with(a, h, limits)?,
    };
    Ok(SumsetOutcome {
        input: a.clone(),
        h,
        result,
        method,
    })
}

/// `h * max|a|`, the radius every sum lies within.
fn radius(a: &IntegerSet, h: u32) -> Result<i64> {
    if h == 0 {
        return Err(Error::ZeroH);
    }
    u64::from(h)
        .checked_mul(a.max_abs())
        .and_then(|r| i64::try_from(r).ok())
        .ok_or_else(|| Error::Overflow(format!("{h} * max|a| = {h} * {}", a.max_abs())))
}

/// Width `2R+1` of the offset range, after checking `layers * width` bits
/// against the cap.
fn table_width(radius: i64, layers: u128, limits: &Limits) -> Result<usize> {
    let width = 2 * radius as u128 + 1;
    let required_bits = layers * width;
    if required_bits > limits.dp_bit_cap {
        return Err(Error::MemoryCap {
            required_bits,
            cap_bits: limits.dp_bit_cap,
        });
    }
    usize::try_from(width).map_err(|_| Error::Overflow(format!("table width {width}")))
}

fn collect(bits: &Bitset, radius: i64) -> IntegerSet {
    IntegerSet::from_sorted(bits.ones().map(|i| i as i64 - radius).collect())
}

/// The h-fold sumset `hA`.
pub fn sumset(a: &IntegerSet, h: u32) -> Result<IntegerSet> {
    sumset_with(a, h, &Limits::default())
}

pub fn sumset_with(a: &IntegerSet, h: u32, limits: &Limits) -> Result<IntegerSet> {
    let r = radius(a, h)?;
    let width = table_width(r, 2, limits)?;
    let mut cur = Bitset::new(width);
    let mut next = Bitset::new(width);
    cur.set(r as usize);
    for _ in 0..h {
        next.clear();
        for &x in a.elements() {
            next.or_shifted(&cur, x);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(collect(&cur, r))
}

/// The signed sumset `h±A`, via the weight-indexed DP.
pub fn signed_sumset(a: &IntegerSet, h: u32) -> Result<IntegerSet> {
    signed_sumset_with(a, h, &Limits::default())
}

pub fn signed_sumset_with(a: &IntegerSet, h: u32, limits: &Limits) -> Result<IntegerSet> {
    let r = radius(a, h)?;
    let hu = h as usize;
    let width = table_width(r, u128::from(h) + 1, limits)?;

    // levels[w]: partial sums reachable with total weight exactly w.
    let mut levels = vec![Bitset::new(width); hu + 1];
    let mut next = levels.clone();
    levels[0].set(r as usize);

    for &x in a.elements() {
        next.iter_mut().for_each(Bitset::clear);
        for w in 0..=hu {
            if levels[w].is_empty() {
                continue;
            }
            let rem = (hu - w) as i64;
            for lam in -rem..=rem {
                // |lam * x| <= h * M, which radius() bounded.
                next[w + lam.unsigned_abs() as usize].or_shifted(&levels[w], lam * x);
            }
        }
        std::mem::swap(&mut levels, &mut next);
    }
    Ok(collect(&levels[hu], r))
}

/// Number of `λ ∈ Z^k` with `Σ|λ_i| = h`, saturating.
pub fn coefficient_vector_count(k: usize, h: u32) -> u128 {
    let h = u128::from(h);
    let k = k as u128;
    (1..=k.min(h))
        .map(|j| {
            binomial(k, j)
                .saturating_mul(binomial(h - 1, j - 1))
                .saturating_mul(1u128.checked_shl(j as u32).unwrap_or(u128::MAX))
        })
        .fold(0u128, u128::saturating_add)
}

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at each step.
        match acc.checked_mul(n - i) {
            Some(v) => acc = v / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// `h±A` by explicit enumeration of every coefficient vector.
pub fn signed_sumset_naive(a: &IntegerSet, h: u32) -> Result<IntegerSet> {
    signed_sumset_naive_with(a, h, &Limits::default())
}

pub fn signed_sumset_naive_with(a: &IntegerSet, h: u32, limits: &Limits) -> Result<IntegerSet> {
    radius(a, h)?;
    let count = coefficient_vector_count(a.len(), h);
    if count > limits.naive_budget {
        return Err(Error::BudgetExceeded {
            what: "coefficient vector enumeration",
            count,
            budget: limits.naive_budget,
        });
    }
    let elems = a.elements();
    let mut sums = BTreeSet::new();
    let mut parts = vec![0u32; elems.len()];
    compositions(&mut parts, 0, h, &mut |parts| {
        let support: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] > 0).collect();
        for signs in 0u64..(1 << support.len()) {
            let mut total: i128 = 0;
            for (bit, &i) in support.iter().enumerate() {
                let term = i128::from(parts[i]) * i128::from(elems[i]);
                if signs >> bit & 1 == 1 {
                    total -= term;
                } else {
                    total += term;
                }
            }
            sums.insert(total);
        }
    });
    let out = sums
        .into_iter()
        .map(|s| i64::try_from(s).map_err(|_| Error::Overflow(format!("sum {s}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerSet::from_sorted(out))
}

/// Calls `visit` on every composition of `remaining` into the slots from
/// `idx` on, in lexicographic order.
fn compositions(parts: &mut [u32], idx: usize, remaining: u32, visit: &mut impl FnMut(&[u32])) {
    if idx + 1 == parts.len() {
        parts[idx] = remaining;
        visit(parts);
        return;
    }
    for v in 0..=remaining {
        parts[idx] = v;
        compositions(parts, idx + 1, remaining - v, visit);
    }
}

/// `A ∪ (-A)`.
pub fn union_with_negation(a: &IntegerSet) -> Result<IntegerSet> {
    let neg = a.negate()?;
    IntegerSet::normalize(a.elements().iter().chain(neg.elements()).copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> IntegerSet {
        IntegerSet::normalize(v.iter().copied()).unwrap()
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&set(&[0, 1, 2]), 2).unwrap(), set(&[0, 1, 2, 3, 4]));
        assert_eq!(sumset(&set(&[1]), 7).unwrap(), set(&[7]));
        assert_eq!(sumset(&set(&[1, 2, 4]), 2).unwrap(), set(&[2, 3, 4, 5, 6, 8]));
        assert_eq!(sumset(&set(&[-3, 1]), 1).unwrap(), set(&[-3, 1]));
    }

    #[test]
    fn signed_sumset_examples() {
        assert_eq!(
            signed_sumset(&set(&[1, 3, 5]), 2).unwrap(),
            set(&[-10, -8, -6, -4, -2, 2, 4, 6, 8, 10])
        );
        assert_eq!(signed_sumset(&set(&[5]), 3).unwrap(), set(&[-15, 15]));
        assert_eq!(
            signed_sumset(&set(&[1, 2]), 3).unwrap(),
            set(&[-6, -5, -4, -3, 0, 3, 4, 5, 6])
        );
        assert_eq!(signed_sumset(&set(&[1, 10]), 3).unwrap().len(), 12);
        assert_eq!(signed_sumset(&set(&[0]), 9).unwrap(), set(&[0]));
    }

    #[test]
    fn signed_is_not_sumset_of_union() {
        // 2(A ∪ -A) contains 0 = 1 + (-1); 2±{1} does not.
        let a = set(&[1]);
        assert_eq!(signed_sumset(&a, 2).unwrap(), set(&[-2, 2]));
        assert_eq!(sumset(&union_with_negation(&a).unwrap(), 2).unwrap(), set(&[-2, 0, 2]));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(signed_sumset_naive(&set(&[1]), 1).unwrap(), set(&[-1, 1]));
        assert_eq!(
            signed_sumset_naive(&set(&[1, 3, 5]), 1).unwrap(),
            set(&[-5, -3, -1, 1, 3, 5])
        );
        let a = set(&[2, 3]);
        assert_eq!(signed_sumset_naive(&a, 5).unwrap(), signed_sumset(&a, 5).unwrap());
    }

    #[test]
    fn union_with_negation_examples() {
        assert_eq!(union_with_negation(&set(&[1, 2])).unwrap(), set(&[-2, -1, 1, 2]));
        assert_eq!(union_with_negation(&set(&[0, 3])).unwrap(), set(&[-3, 0, 3]));
        assert_eq!(union_with_negation(&set(&[-1, 1])).unwrap(), set(&[-1, 1]));
    }

    #[test]
    fn vector_count_matches_enumeration() {
        for k in 1..=5usize {
            for h in 1..=6u32 {
                let mut n = 0u128;
                let mut parts = vec![0u32; k];
                compositions(&mut parts, 0, h, &mut |p| {
                    n += 1 << p.iter().filter(|&&x| x > 0).count();
                });
                assert_eq!(coefficient_vector_count(k, h), n, "k={k} h={h}");
            }
        }
        assert_eq!(binomial(25, 5), 53130);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn error_paths() {
        let big = set(&[i64::MAX / 2]);
        assert!(matches!(signed_sumset(&big, 3), Err(Error::Overflow(_))));
        assert!(matches!(sumset(&big, 3), Err(Error::Overflow(_))));
        assert_eq!(signed_sumset(&set(&[1]), 0), Err(Error::ZeroH));
        assert!(matches!(
            signed_sumset(&set(&[1 << 30]), 4),
            Err(Error::MemoryCap { .. })
        ));
        let tight = Limits {
            naive_budget: 5,
            ..Limits::default()
        };
        assert!(matches!(
            signed_sumset_naive_with(&set(&[1, 2, 3]), 3, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}

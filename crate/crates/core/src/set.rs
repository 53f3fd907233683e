//! Canonical integer sets, sign-regime classification and the structure
//! detector used by the inverse results.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-empty finite set of integers, stored strictly increasing.
///
/// Elements are `a_0 < a_1 < ... < a_{k-1}`; `k` is [`IntegerSet::len`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerSet {
    elements: Vec<i64>,
}

impl IntegerSet {
    /// Sorts and deduplicates `values`.
    pub fn normalize(values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut elements: Vec<i64> = values.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { elements })
    }

    /// Builds a set from values already strictly increasing.
    ///
    /// Panics in debug builds if the input is not strictly increasing.
    pub(crate) fn from_sorted(elements: Vec<i64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Cardinality `k`; never zero.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_element(&self) -> i64 {
        self.elements[0]
    }

    pub fn max_element(&self) -> i64 {
        self.elements[self.elements.len() - 1]
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `max |a|` over the set.
    pub fn max_abs(&self) -> u64 {
        self.min_element().unsigned_abs().max(self.max_element().unsigned_abs())
    }

    pub fn classify(&self) -> CaseTag {
        let (lo, hi) = (self.min_element(), self.max_element());
        if lo > 0 {
            CaseTag::PositiveOnly
        } else if lo == 0 {
            CaseTag::NonnegWithZero
        } else if hi > 0 {
            CaseTag::MixedSign
        } else if hi < 0 {
            CaseTag::NegativeOnly
        } else {
            CaseTag::NonposWithZero
        }
    }

    /// `{alpha * a : a in A}`.
    pub fn dilate(&self, alpha: i64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::UnsupportedParameters(
                "dilation factor must be nonzero".into(),
            ));
        }
        let mut out = self
            .elements
            .iter()
            .map(|&a| {
                a.checked_mul(alpha)
                    .ok_or_else(|| Error::Overflow(format!("{alpha} * {a}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if alpha < 0 {
            out.reverse();
        }
        Ok(Self::from_sorted(out))
    }

    /// `-A`. Fails only when the set contains `i64::MIN`.
    pub fn negate(&self) -> Result<Self> {
        self.dilate(-1)
    }

    /// `a_i = -a_{k-1-i}` for every `i`.
    pub fn is_symmetric(&self) -> bool {
        let e = &self.elements;
        let k = e.len();
        (0..k).all(|i| i128::from(e[i]) == -i128::from(e[k - 1 - i]))
    }

    /// Common difference when the set is an arithmetic progression with
    /// `k >= 2`; every two-element set qualifies.
    pub fn common_difference(&self) -> Option<i128> {
        let e = &self.elements;
        if e.len() < 2 {
            return None;
        }
        let d = i128::from(e[1]) - i128::from(e[0]);
        e.windows(2)
            .all(|w| i128::from(w[1]) - i128::from(w[0]) == d)
            .then_some(d)
    }

    /// Most specific structure, in the priority order
    /// `OddApDilate > IntervalDilate > SymmetricAp > GeneralAp > Irregular`.
    pub fn detect_structure(&self) -> Structure {
        let a0 = self.min_element();
        if self.len() == 1 {
            return Structure::GeneralAp { d: None, first: a0 };
        }
        let Some(d) = self.common_difference() else {
            return Structure::Irregular;
        };
        // d > 0 and d <= 2 * i64::MAX + 1, which may not fit i64.
        if a0 > 0 && d == 2 * i128::from(a0) {
            return Structure::OddApDilate { d: a0 as u64 };
        }
        let d = u64::try_from(d).expect("difference of two i64 fits u64");
        if a0 == 0 {
            Structure::IntervalDilate { d }
        } else if self.is_symmetric() {
            Structure::SymmetricAp { d, first: a0 }
        } else {
            Structure::GeneralAp { d: Some(d), first: a0 }
        }
    }
}

impl TryFrom<Vec<i64>> for IntegerSet {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::normalize(v)
    }
}

impl From<IntegerSet> for Vec<i64> {
    fn from(s: IntegerSet) -> Self {
        s.elements
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Sign regime of a set. Exactly one tag applies to any [`IntegerSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// `min(A) > 0`
    PositiveOnly,
    /// `min(A) = 0`
    NonnegWithZero,
    /// `min(A) < 0 < max(A)`
    MixedSign,
    /// `max(A) < 0`
    NegativeOnly,
    /// `max(A) = 0` and `k >= 2`
    NonposWithZero,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [
        CaseTag::PositiveOnly,
        CaseTag::NonnegWithZero,
        CaseTag::MixedSign,
        CaseTag::NegativeOnly,
        CaseTag::NonposWithZero,
    ];

    /// Tag of `-A` given the tag of `A`.
    pub fn negated(self) -> CaseTag {
        match self {
            CaseTag::PositiveOnly => CaseTag::NegativeOnly,
            CaseTag::NegativeOnly => CaseTag::PositiveOnly,
            CaseTag::NonnegWithZero => CaseTag::NonposWithZero,
            CaseTag::NonposWithZero => CaseTag::NonnegWithZero,
            CaseTag::MixedSign => CaseTag::MixedSign,
        }
    }

    /// The regime the bound formulas are stated for; negative regimes map
    /// to their mirror image.
    pub fn reduced(self) -> CaseTag {
        match self {
            CaseTag::NegativeOnly | CaseTag::NonposWithZero => self.negated(),
            other => other,
        }
    }

    pub fn is_reduced_by_negation(self) -> bool {
        self.reduced() != self
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Extremal structure detected in a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Structure {
    /// `A = d * {1, 3, ..., 2k-1}`: an AP with `a_0 = d` and difference `2d`.
    OddApDilate { d: u64 },
    /// `A = d * [0, k-1]`.
    IntervalDilate { d: u64 },
    /// An AP with `a_i = -a_{k-1-i}`.
    SymmetricAp { d: u64, first: i64 },
    /// Any other AP. Singletons report `d: None`.
    GeneralAp { d: Option<u64>, first: i64 },
    /// Not an arithmetic progression.
    #[serde(rename = "None")]
    Irregular,
}

impl Structure {
    pub fn is_ap(&self) -> bool {
        !matches!(self, Structure::Irregular)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::OddApDilate { .. } => "OddApDilate",
            Structure::IntervalDilate { .. } => "IntervalDilate",
            Structure::SymmetricAp { .. } => "SymmetricAp",
            Structure::GeneralAp { .. } => "GeneralAp",
            Structure::Irregular => "None",
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::OddApDilate { d } | Structure::IntervalDilate { d } => {
                write!(f, "{}(d={d})", self.kind())
            }
            Structure::SymmetricAp { d, first } => write!(f, "SymmetricAp(d={d}, first={first})"),
            Structure::GeneralAp { d: Some(d), first } => {
                write!(f, "GeneralAp(d={d}, first={first})")
            }
            Structure::GeneralAp { d: None, first } => write!(f, "GeneralAp(first={first})"),
            Structure::Irregular => f.write_str("None"),
        }
    }
}

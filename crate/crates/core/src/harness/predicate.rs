use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{self, Limits};
use crate::error::{Error, Result};
use crate::set::{CaseTag, IntegerSet, Structure};
use crate::theorems;

/// A checkable statement, evaluated per `(A, h)` pair.
///
/// Direct bounds (`T1`, `T3`, `T5`, `T7`) apply to every set in their sign
/// regime over the caller's `k` and `h` ranges, with the `h >= 3` condition
/// of `T3` enforced. Inverse checks need `k >= 2`. `T8Literal` is `T8`
/// with the arithmetic-progression conclusion demanded at `h = 1` too.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PredicateId {
    OracleEq,
    ThmA,
    ThmB,
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T8Literal,
    RemarkK2,
    Containment,
    Dilation,
    Negation,
    Parity,
}

impl PredicateId {
    pub const ALL: [PredicateId; 17] = [
        PredicateId::OracleEq,
        PredicateId::ThmA,
        PredicateId::ThmB,
        PredicateId::T1,
        PredicateId::T2,
        PredicateId::T3,
        PredicateId::T4,
        PredicateId::T5,
        PredicateId::T6,
        PredicateId::T7,
        PredicateId::T8,
        PredicateId::T8Literal,
        PredicateId::RemarkK2,
        PredicateId::Containment,
        PredicateId::Dilation,
        PredicateId::Negation,
        PredicateId::Parity,
    ];
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for PredicateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PredicateId::ALL
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// One side of a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Observation {
    Count(u64),
    Set(IntegerSet),
    Structure(Structure),
    Text(String),
}

/// An `(A, h)` pair on which a predicate failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: IntegerSet,
    pub h: u32,
    pub predicate: PredicateId,
    pub expected: Observation,
    pub actual: Observation,
}

/// Result of evaluating one predicate on one pair.
#[derive(Debug, Default)]
pub(crate) struct PairOutcome {
    pub checked: bool,
    pub tight: bool,
    pub witness: Option<Witness>,
    /// `|h±A|` for mixed-sign sets of even size, tracked by `T7`.
    pub even_k_cardinality: Option<u64>,
}

impl PairOutcome {
    fn skipped() -> Self {
        Self::default()
    }

    fn pass(tight: bool) -> Self {
        Self {
            checked: true,
            tight,
            ..Self::default()
        }
    }
}

/// Lazily computed per-pair quantities.
struct Pair<'a> {
    set: &'a IntegerSet,
    h: u32,
    limits: &'a Limits,
    signed: Option<IntegerSet>,
}

impl<'a> Pair<'a> {
    fn signed(&mut self) -> Result<&IntegerSet> {
        if self.signed.is_none() {
            self.signed = Some(engine::signed_sumset_with(self.set, self.h, self.limits)?);
        }
        Ok(self.signed.as_ref().expect("just computed"))
    }

    fn card(&mut self) -> Result<u64> {
        Ok(self.signed()?.len() as u64)
    }

    fn fail(&self, predicate: PredicateId, expected: Observation, actual: Observation) -> PairOutcome {
        PairOutcome {
            checked: true,
            tight: false,
            witness: Some(Witness {
                set: self.set.clone(),
                h: self.h,
                predicate,
                expected,
                actual,
            }),
            even_k_cardinality: None,
        }
    }

    /// `cardinality >= bound`; tight on equality.
    fn at_least(&mut self, p: PredicateId, bound: u64) -> Result<PairOutcome> {
        let card = self.card()?;
        Ok(if card < bound {
            self.fail(p, Observation::Count(bound), Observation::Count(card))
        } else {
            PairOutcome::pass(card == bound)
        })
    }

    /// The set mapped into its non-negative mirror when needed.
    fn reduced(&self) -> Result<IntegerSet> {
        if self.set.classify().is_reduced_by_negation() {
            self.set.negate()
        } else {
            Ok(self.set.clone())
        }
    }

    fn expect_structure(
        &mut self,
        p: PredicateId,
        bound: u64,
        expected: Structure,
        observed: Structure,
    ) -> Result<PairOutcome> {
        let card = self.card()?;
        Ok(if card != bound {
            PairOutcome::pass(false)
        } else if observed == expected {
            PairOutcome::pass(true)
        } else {
            self.fail(p, Observation::Structure(expected), Observation::Structure(observed))
        })
    }
}

fn set_text(s: &IntegerSet) -> Observation {
    Observation::Set(s.clone())
}

fn first_gap(e: &[i64]) -> u64 {
    u64::try_from(i128::from(e[1]) - i128::from(e[0])).unwrap_or(u64::MAX)
}

pub(crate) fn evaluate(
    p: PredicateId,
    set: &IntegerSet,
    h: u32,
    limits: &Limits,
) -> Result<PairOutcome> {
    let mut pair = Pair {
        set,
        h,
        limits,
        signed: None,
    };
    let k = set.len();
    let case = set.classify().reduced();
    use PredicateId as P;
    match p {
        P::OracleEq => {
            let naive = engine::signed_sumset_naive_with(set, h, limits)?;
            let dp = pair.signed()?.clone();
            Ok(if dp == naive {
                PairOutcome::pass(false)
            } else {
                pair.fail(p, set_text(&naive), set_text(&dp))
            })
        }
        P::ThmA | P::ThmB => {
            if h < 2 {
                return Ok(PairOutcome::skipped());
            }
            let card = engine::sumset_with(set, h, limits)?.len() as u64;
            let bound = theorems::plain_bound(k, h);
            if p == P::ThmA {
                return Ok(if card < bound {
                    pair.fail(p, Observation::Count(bound), Observation::Count(card))
                } else {
                    PairOutcome::pass(card == bound)
                });
            }
            let structure = set.detect_structure();
            Ok(match (card == bound, structure.is_ap()) {
                (true, true) => PairOutcome::pass(true),
                (false, false) => PairOutcome::pass(false),
                (true, false) => pair.fail(
                    p,
                    Observation::Text("arithmetic progression".into()),
                    Observation::Structure(structure),
                ),
                (false, true) => pair.fail(p, Observation::Count(bound), Observation::Count(card)),
            })
        }
        P::T1 if case == CaseTag::PositiveOnly => pair.at_least(p, theorems::positive_bound(k, h)),
        P::T3 if case == CaseTag::PositiveOnly && h >= 3 => {
            pair.at_least(p, theorems::positive_bound_strong(k, h))
        }
        P::T5 if case == CaseTag::NonnegWithZero => pair.at_least(p, theorems::zero_bound(k, h)),
        P::T7 if case == CaseTag::MixedSign => {
            let mut out = pair.at_least(p, theorems::plain_bound(k, h))?;
            if k % 2 == 0 {
                out.even_k_cardinality = Some(pair.card()?);
            }
            Ok(out)
        }
        P::T2 if case == CaseTag::PositiveOnly && k >= 2 && h >= 2 => {
            let b = pair.reduced()?;
            let expected = Structure::OddApDilate { d: b.min_element() as u64 };
            let bound = theorems::positive_bound(k, h);
            if h == 2 {
                return pair.expect_structure(p, bound, expected, b.detect_structure());
            }
            let card = pair.card()?;
            Ok(if card == bound {
                pair.fail(
                    p,
                    Observation::Text("tight at 2(hk-h+1) only when h = 2".into()),
                    Observation::Count(card),
                )
            } else {
                PairOutcome::pass(false)
            })
        }
        P::T4 if case == CaseTag::PositiveOnly && k >= 2 && h >= 3 => {
            let b = pair.reduced()?;
            let expected = Structure::OddApDilate { d: b.min_element() as u64 };
            let bound = theorems::positive_bound_strong(k, h);
            pair.expect_structure(p, bound, expected, b.detect_structure())
        }
        P::T6 if case == CaseTag::NonnegWithZero && k >= 2 && h >= 2 => {
            let b = pair.reduced()?;
            let expected = Structure::IntervalDilate { d: first_gap(b.elements()) };
            let observed = b.detect_structure();
            let card = pair.card()?;
            let tight = card == theorems::zero_bound(k, h);
            // Both directions: tight exactly when an interval dilate.
            Ok(match (tight, observed == expected) {
                (true, true) => PairOutcome::pass(true),
                (false, false) => PairOutcome::pass(false),
                (true, false) => pair.fail(
                    p,
                    Observation::Structure(expected),
                    Observation::Structure(observed),
                ),
                (false, true) => pair.fail(
                    p,
                    Observation::Count(theorems::zero_bound(k, h)),
                    Observation::Count(card),
                ),
            })
        }
        P::T8 | P::T8Literal if case == CaseTag::MixedSign => {
            let e = set.elements();
            let expected = Structure::SymmetricAp {
                d: first_gap(e),
                first: e[0],
            };
            let bound = theorems::plain_bound(k, h);
            if p == P::T8 && h == 1 {
                let card = pair.card()?;
                return Ok(if card != bound {
                    PairOutcome::pass(false)
                } else if set.is_symmetric() {
                    PairOutcome::pass(true)
                } else {
                    pair.fail(
                        p,
                        Observation::Text("symmetric set".into()),
                        set_text(set),
                    )
                });
            }
            pair.expect_structure(p, bound, expected, set.detect_structure())
        }
        P::RemarkK2 if case == CaseTag::PositiveOnly && k == 2 && h >= 3 => {
            let b = pair.reduced()?;
            let (a0, a1) = (b.elements()[0], b.elements()[1]);
            let cap = 4 * u64::from(h);
            let card = pair.card()?;
            Ok(match theorems::remark_k2_prediction(a0, a1, h) {
                _ if card > cap => {
                    pair.fail(p, Observation::Text(format!("at most {cap}")), Observation::Count(card))
                }
                Some(exact) if exact != card => {
                    pair.fail(p, Observation::Count(exact), Observation::Count(card))
                }
                _ => PairOutcome::pass(card == cap),
            })
        }
        P::Containment => {
            let neg = set.negate()?;
            let lower = engine::sumset_with(set, h, limits)?;
            let lower_neg = engine::sumset_with(&neg, h, limits)?;
            let upper = engine::sumset_with(&engine::union_with_negation(set)?, h, limits)?;
            let signed = pair.signed()?.clone();
            let missing = lower
                .elements()
                .iter()
                .chain(lower_neg.elements())
                .find(|&&x| !signed.contains(x));
            if let Some(&x) = missing {
                return Ok(pair.fail(
                    p,
                    Observation::Text(format!("hA ∪ h(-A) ⊆ h±A, including {x}")),
                    set_text(&signed),
                ));
            }
            let stray = signed.elements().iter().find(|&&x| !upper.contains(x));
            Ok(match stray {
                Some(&x) => pair.fail(
                    p,
                    Observation::Text(format!("h±A ⊆ h(A ∪ -A), excluding {x}")),
                    set_text(&signed),
                ),
                None => PairOutcome::pass(false),
            })
        }
        P::Dilation => {
            let signed = pair.signed()?.clone();
            for alpha in [-3i64, -2, -1, 1, 2, 3] {
                let lhs = engine::signed_sumset_with(&set.dilate(alpha)?, h, limits)?;
                let rhs = signed.dilate(alpha)?;
                if lhs != rhs {
                    return Ok(pair.fail(p, set_text(&rhs), set_text(&lhs)));
                }
            }
            Ok(PairOutcome::pass(false))
        }
        P::Negation => {
            let signed = pair.signed()?;
            let neg = signed.negate()?;
            Ok(if *signed == neg {
                PairOutcome::pass(false)
            } else {
                let signed = signed.clone();
                pair.fail(p, set_text(&neg), set_text(&signed))
            })
        }
        P::Parity if set.elements().iter().all(|a| a % 2 != 0) => {
            let want = i64::from(h % 2);
            let signed = pair.signed()?;
            Ok(match signed.elements().iter().find(|&&x| x.rem_euclid(2) != want) {
                Some(&x) => pair.fail(
                    p,
                    Observation::Text(if want == 0 { "all even" } else { "all odd" }.into()),
                    Observation::Text(format!("contains {x}")),
                ),
                None => PairOutcome::pass(false),
            })
        }
        _ => Ok(PairOutcome::skipped()),
    }
}

//! Signed h-fold sumsets of finite integer sets.
//!
//! For `A = {a_0 < ... < a_{k-1}}` and `h >= 1`, the signed sumset `h±A`
//! collects `Σ λ_i a_i` over all `λ ∈ Z^k` with `Σ |λ_i| = h`. This crate
//! computes it (and the plain sumset `hA`), evaluates the known lower bounds
//! on `|h±A|` for each sign regime of `A`, identifies the sets that attain
//! them, and checks all of this exhaustively over small families.
//!
//! ```
//! use sumset_core::{engine, IntegerSet};
//!
//! let a = IntegerSet::normalize([1, 3, 5]).unwrap();
//! let s = engine::signed_sumset(&a, 2).unwrap();
//! assert_eq!(s.elements(), &[-10, -8, -6, -4, -2, 2, 4, 6, 8, 10]);
//! ```

mod bitset;
pub mod engine;
mod error;
pub mod harness;
mod set;
pub mod theorems;

pub use engine::{Limits, Method, SumsetOutcome};
pub use error::{Error, Result};
pub use harness::{FamilySpec, PredicateId, VerificationSummary, VerifyOptions, Witness};
pub use set::{CaseTag, IntegerSet, Structure};
pub use theorems::{DirectReport, InverseVerdict, TheoremId};

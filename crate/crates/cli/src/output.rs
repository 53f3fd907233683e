//! Output documents. JSON keys follow struct field order.

use std::fmt::Write as _;

use serde::Serialize;
use sumset_core::harness::{Observation, TightSet};
use sumset_core::{DirectReport, IntegerSet, VerificationSummary, Witness};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Serialize)]
pub struct OutputRecord<I, R> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub result: R,
}

impl<I: Serialize, R: Serialize> OutputRecord<I, R> {
    pub fn new(command: &'static str, inputs: I, result: R) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("output records serialize")
    }
}

#[derive(Debug, Serialize)]
pub struct ComputeResult {
    pub kind: &'static str,
    pub sumset: IntegerSet,
    pub cardinality: u64,
    pub case: sumset_core::CaseTag,
    pub bound_source: String,
    pub bound: u64,
    pub tight: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    #[serde(flatten)]
    pub summary: VerificationSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ConstructResult {
    pub set: IntegerSet,
    pub report: DirectReport,
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn observation(o: &Observation) -> String {
    match o {
        Observation::Text(t) => t.clone(),
        other => compact(other),
    }
}

pub fn compute_tsv(r: &ComputeResult) -> String {
    format!(
        "kind\t{}\nsumset\t{}\ncardinality\t{}\ncase\t{}\nbound_source\t{}\nbound\t{}\ntight\t{}\n",
        r.kind,
        compact(&r.sumset),
        r.cardinality,
        r.case,
        r.bound_source,
        r.bound,
        r.tight
    )
}

pub fn verify_tsv(results: &[VerifyResult]) -> String {
    let mut out = String::from("predicate\tsets_checked\tviolation_count\ttight_count\n");
    for r in results {
        let s = &r.summary;
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            s.predicate, s.sets_checked, s.violation_count, s.tight_count
        )
        .unwrap();
    }
    let witnesses: Vec<&Witness> = results.iter().flat_map(|r| &r.summary.violations).collect();
    if !witnesses.is_empty() {
        out.push_str("\npredicate\tset\th\texpected\tactual\n");
        for w in witnesses {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                w.predicate,
                compact(&w.set),
                w.h,
                observation(&w.expected),
                observation(&w.actual)
            )
            .unwrap();
        }
    }
    out
}

pub fn scan_tsv(found: &[TightSet]) -> String {
    let mut out = String::from("set\tcardinality\tbound\ttheorem\texpected\tobserved\tmatches\n");
    for t in found {
        let (theorem, expected, observed, matches) = match &t.verdict {
            Some(v) => (
                v.theorem.to_string(),
                v.expected_structure.to_string(),
                v.observed_structure.to_string(),
                v.matches_theorem.to_string(),
            ),
            None => ("-".into(), "-".into(), "-".into(), "-".into()),
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{theorem}\t{expected}\t{observed}\t{matches}",
            compact(&t.set),
            t.cardinality,
            t.bound
        )
        .unwrap();
    }
    out
}

pub fn construct_tsv(r: &ConstructResult) -> String {
    let rep = &r.report;
    format!(
        "set\t{}\ncase\t{}\nh\t{}\nbound_source\t{}\nbound\t{}\ncardinality\t{}\ntight\t{}\n",
        compact(&r.set),
        rep.case,
        rep.h,
        rep.theorem,
        rep.bound,
        rep.cardinality,
        rep.tight
    )
}

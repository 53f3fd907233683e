mod args;
mod output;

use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;
use sumset_core::harness::{self, FamilySpec, PlannedCheck, VerifyOptions};
use sumset_core::{engine, theorems, CaseTag, Error, IntegerSet, Limits, PredicateId};

use args::{Cli, Command, ComputeArgs, ConstructArgs, FamilyArgs, Format, Kind, ScanArgs, VerifyArgs};
use output::{ComputeResult, ConstructResult, OutputRecord, VerifyResult};

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_OVERFLOW: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e.root() {
        Error::BudgetExceeded { .. } | Error::MemoryCap { .. } => EXIT_BUDGET,
        Error::Overflow(_) => EXIT_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Exit status plus the document to print.
struct Output {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let limits = cli.limits.limits();
    let result = match &cli.command {
        Command::Compute(a) => compute(a, cli.format, &limits),
        Command::Verify(a) => verify(a, cli.format, &limits),
        Command::Scan(a) => scan(a, cli.format, &limits),
        Command::Construct(a) => construct(a, cli.format, &limits),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(if out.ok { 0 } else { EXIT_VIOLATIONS })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[derive(Serialize)]
struct ComputeInputs {
    set: IntegerSet,
    h: u32,
    kind: &'static str,
    duplicates_removed: usize,
}

fn compute(a: &ComputeArgs, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let values = args::parse_set_literal(&a.set).map_err(Failure::Usage)?;
    let set = IntegerSet::normalize(values.iter().copied())?;
    let duplicates = values.len() - set.len();
    if duplicates > 0 {
        eprintln!("warning: removed {duplicates} duplicate value(s) from the set literal");
    }
    if a.h == 0 {
        return Err(Error::ZeroH.into());
    }

    let (kind, sumset) = match a.kind {
        Kind::Signed => ("signed", engine::signed_sumset_with(&set, a.h, limits)?),
        Kind::Naive => ("naive", engine::signed_sumset_naive_with(&set, a.h, limits)?),
        Kind::Plain => ("plain", engine::sumset_with(&set, a.h, limits)?),
    };
    let cardinality = sumset.len() as u64;
    let result = if a.kind == Kind::Plain {
        let bound = theorems::plain_bound(set.len(), a.h);
        ComputeResult {
            kind,
            sumset,
            cardinality,
            case: set.classify(),
            bound_source: "ThmA".into(),
            bound,
            tight: cardinality == bound,
        }
    } else {
        let r = theorems::DirectReport::from_cardinality(&set, a.h, cardinality);
        ComputeResult {
            kind,
            sumset,
            cardinality,
            case: r.case,
            bound_source: r.theorem.to_string(),
            bound: r.bound,
            tight: r.tight,
        }
    };
    let text = match format {
        Format::Json => OutputRecord::new(
            "compute",
            ComputeInputs {
                set,
                h: a.h,
                kind,
                duplicates_removed: duplicates,
            },
            &result,
        )
        .to_json(),
        Format::Tsv => output::compute_tsv(&result),
    };
    Ok(Output { text, ok: true })
}

fn family(f: &FamilyArgs, h: std::ops::RangeInclusive<u32>) -> FamilySpec {
    FamilySpec::new(f.k.clone(), f.max, h, f.case.map(CaseTag::from))
}

#[derive(Serialize)]
struct VerifyInputs<'a> {
    predicate: &'a str,
    checks: Vec<PlannedCheck>,
    witness_cap: usize,
}

fn verify(a: &VerifyArgs, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let plan = if a.predicate == "all" {
        harness::standard_plan()
    } else {
        let predicate: PredicateId = a.predicate.parse()?;
        vec![PlannedCheck {
            predicate,
            family: family(&a.family, a.h.clone()),
        }]
    };
    let opts = VerifyOptions {
        limits: *limits,
        witness_cap: a.witness_cap,
    };
    let results: Vec<VerifyResult> = plan
        .iter()
        .map(|c| {
            harness::verify(c.predicate, &c.family, &opts).map(|summary| VerifyResult {
                runtime_seconds: a.timing.then_some(summary.runtime.as_secs_f64()),
                summary,
            })
        })
        .collect::<Result<_, _>>()?;
    let ok = results.iter().all(|r| r.summary.passed());
    let text = match format {
        Format::Tsv => output::verify_tsv(&results),
        Format::Json => {
            let inputs = VerifyInputs {
                predicate: &a.predicate,
                checks: plan.clone(),
                witness_cap: a.witness_cap,
            };
            if results.len() == 1 {
                OutputRecord::new("verify", inputs, &results[0]).to_json()
            } else {
                OutputRecord::new("verify", inputs, &results).to_json()
            }
        }
    };
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct ScanInputs {
    family: FamilySpec,
    h: u32,
}

fn scan(a: &ScanArgs, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let spec = family(&a.family, a.h..=a.h);
    let found = harness::scan_tight_sets(&spec, a.h, limits)?;
    let ok = found
        .iter()
        .all(|t| t.verdict.as_ref().map_or(true, |v| v.matches_theorem));
    let text = match format {
        Format::Json => OutputRecord::new("scan", ScanInputs { family: spec, h: a.h }, &found).to_json(),
        Format::Tsv => output::scan_tsv(&found),
    };
    Ok(Output { text, ok })
}

#[derive(Serialize)]
struct ConstructInputs {
    case: CaseTag,
    k: usize,
    h: u32,
    d: u64,
}

fn construct(a: &ConstructArgs, format: Format, limits: &Limits) -> Result<Output, Failure> {
    let case = CaseTag::from(a.case);
    let set = theorems::construct_extremal(case, a.k, a.h, a.d)?;
    let report = theorems::check_direct(&set, a.h, limits)?;
    let result = ConstructResult { set, report };
    let text = match format {
        Format::Json => OutputRecord::new(
            "construct",
            ConstructInputs {
                case,
                k: a.k,
                h: a.h,
                d: a.d,
            },
            &result,
        )
        .to_json(),
        Format::Tsv => output::construct_tsv(&result),
    };
    Ok(Output { text, ok: true })
}

use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sumset_core::{CaseTag, Limits};

#[derive(Debug, Parser)]
#[command(name = "sumset", version, about = "Signed h-fold sumsets of integer sets")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for exhaustive runs (default: available processors).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(flatten)]
    pub limits: LimitArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Maximum candidate subsets a family may enumerate.
    #[arg(long, global = true, env = "SUMSET_FAMILY_BUDGET", default_value_t = 10_000_000)]
    pub family_budget: u128,

    /// Maximum coefficient vectors the naive oracle may visit.
    #[arg(long, global = true, env = "SUMSET_NAIVE_BUDGET", default_value_t = 10_000_000)]
    pub naive_budget: u128,

    /// Maximum bits a sumset DP table may occupy.
    #[arg(long, global = true, env = "SUMSET_DP_BIT_CAP", default_value_t = 1 << 31)]
    pub dp_bit_cap: u128,
}

impl LimitArgs {
    pub fn limits(&self) -> Limits {
        Limits {
            dp_bit_cap: self.dp_bit_cap,
            naive_budget: self.naive_budget,
            family_budget: self.family_budget,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a sumset of one set and compare its size with the bound.
    Compute(ComputeArgs),
    /// Check a predicate exhaustively over a family of sets.
    Verify(VerifyArgs),
    /// List the sets of a family that attain their bound, with inverse verdicts.
    Scan(ScanArgs),
    /// Build an extremal set and report on it.
    Construct(ConstructArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Comma-separated integers, e.g. `1,3,5` or `-2, 0, 7`.
    #[arg(long, allow_hyphen_values = true)]
    pub set: String,

    #[arg(long)]
    pub h: u32,

    #[arg(long, value_enum, default_value_t = Kind::Signed)]
    pub kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// h±A via the dynamic program.
    Signed,
    /// hA.
    Plain,
    /// h±A by enumerating every coefficient vector.
    Naive,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Set sizes, as `K` or `LO..HI` (inclusive).
    #[arg(long, value_parser = parse_range::<usize>, default_value = "1..5")]
    pub k: RangeInclusive<usize>,

    /// Elements are drawn from [-MAX, MAX].
    #[arg(long, default_value_t = 12)]
    pub max: i64,

    /// Restrict to one sign regime.
    #[arg(long, value_enum)]
    pub case: Option<CaseArg>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Predicate id (T1..T8, T8Literal, ThmA, ThmB, RemarkK2, Containment,
    /// Dilation, Negation, Parity, OracleEq), or `all` for the standard plan.
    pub predicate: String,

    #[command(flatten)]
    pub family: FamilyArgs,

    /// Values of h, as `H` or `LO..HI` (inclusive).
    #[arg(long, value_parser = parse_range::<u32>, default_value = "1..5")]
    pub h: RangeInclusive<u32>,

    /// Witnesses reported per predicate; the violation count stays exact.
    #[arg(long, default_value_t = 100)]
    pub witness_cap: usize,

    /// Include wall-clock time in the output.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    #[arg(long)]
    pub h: u32,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub case: CaseArg,

    #[arg(long)]
    pub k: usize,

    #[arg(long)]
    pub h: u32,

    /// Dilation factor.
    #[arg(long, default_value_t = 1)]
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Positive,
    Zero,
    Mixed,
    Negative,
    Nonpositive,
}

impl From<CaseArg> for CaseTag {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Positive => CaseTag::PositiveOnly,
            CaseArg::Zero => CaseTag::NonnegWithZero,
            CaseArg::Mixed => CaseTag::MixedSign,
            CaseArg::Negative => CaseTag::NegativeOnly,
            CaseArg::Nonpositive => CaseTag::NonposWithZero,
        }
    }
}

/// Parses `N`, `LO..HI` or `LO..=HI`, all inclusive.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd + Copy,
    T::Err: std::fmt::Display,
{
    let num = |t: &str| t.trim().parse::<T>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Parses a set literal; returns the values in input order.
pub fn parse_set_literal(s: &str) -> Result<Vec<i64>, String> {
    let body = s.trim();
    let body = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .or_else(|| body.strip_prefix('[').and_then(|b| b.strip_suffix(']')))
        .unwrap_or(body);
    if body.trim().is_empty() {
        return Err("set literal is empty".into());
    }
    body.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>().map_err(|e| format!("`{t}` is not an integer: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<u32>("3..5"), Ok(3..=5));
        assert_eq!(parse_range::<u32>("3..=5"), Ok(3..=5));
        assert_eq!(parse_range::<u32>("4"), Ok(4..=4));
        assert!(parse_range::<u32>("5..3").is_err());
        assert!(parse_range::<u32>("x").is_err());
    }

    #[test]
    fn set_literals() {
        assert_eq!(parse_set_literal("1,3,5"), Ok(vec![1, 3, 5]));
        assert_eq!(parse_set_literal(" -2 , 0,7 "), Ok(vec![-2, 0, 7]));
        assert_eq!(parse_set_literal("{1,1,2}"), Ok(vec![1, 1, 2]));
        assert_eq!(parse_set_literal("[4]"), Ok(vec![4]));
        assert!(parse_set_literal("").is_err());
        assert!(parse_set_literal("1,,2").is_err());
        assert!(parse_set_literal("1,a").is_err());
    }
}

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sumset_core::harness::{self, FamilySpec, PredicateId, VerifyOptions};
use sumset_core::{engine, CaseTag, IntegerSet};

fn signed_dp_vs_naive(c: &mut Criterion) {
    let mut group = c.benchmark_group("signed_sumset");
    let a = IntegerSet::normalize([-11, -4, 2, 7, 12]).unwrap();
    for h in [2u32, 4, 5] {
        group.bench_with_input(BenchmarkId::new("dp", h), &h, |b, &h| {
            b.iter(|| engine::signed_sumset(black_box(&a), h).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("naive", h), &h, |b, &h| {
            b.iter(|| engine::signed_sumset_naive(black_box(&a), h).unwrap())
        });
    }
    group.finish();
}

fn wide_dp(c: &mut Criterion) {
    let a = IntegerSet::normalize((1..=20).map(|i| i * i * 37)).unwrap();
    c.bench_function("signed_sumset/dp_k20_h6_wide", |b| {
        b.iter(|| engine::signed_sumset(black_box(&a), 6).unwrap())
    });
}

fn verify_family(c: &mut Criterion) {
    let spec = FamilySpec::new(3..=4, 10, 2..=4, Some(CaseTag::PositiveOnly));
    let opts = VerifyOptions::default();
    c.bench_function("verify/T3_positive_k3-4_M10", |b| {
        b.iter(|| harness::verify(PredicateId::T3, black_box(&spec), &opts).unwrap())
    });
}

criterion_group!(benches, signed_dp_vs_naive, wide_dp, verify_family);
criterion_main!(benches);

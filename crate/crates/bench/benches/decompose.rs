use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ritt_bench::{poly, power};
use ritt_core::field::Field;
use ritt_core::oracle::check_engine_against_oracle;
use ritt_core::polyfield::all_complete_decompositions;

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose/power_q");
    for n in [6, 12, 24, 30] {
        let f = power(&Field::Rational, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| all_complete_decompositions(black_box(f)).unwrap())
        });
    }
    group.finish();

    let triple = poly("triple12_q");
    c.bench_function("decompose/triple12_q", |b| b.iter(|| all_complete_decompositions(black_box(&triple)).unwrap()));
    let nine = poly("nine_f7");
    c.bench_function("decompose/oracle_nine_f7", |b| b.iter(|| check_engine_against_oracle(black_box(&nine)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = decompose
}
criterion_main!(benches);

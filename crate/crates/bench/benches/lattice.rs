use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ritt_bench::context;
use ritt_core::chains::{maximal_chains, verify_ritt_first, verify_rho_bijection, ChainContext};
use ritt_core::fixtures;

fn lattice(c: &mut Criterion) {
    let m16 = context("m16_regular");
    c.bench_function("lattice/build_m16", |b| {
        b.iter(|| {
            ChainContext::with_stabilizer("m16", m16.g().clone(), 0, m16.a().cloned()).unwrap()
        })
    });
    c.bench_function("lattice/maximal_chains_m16", |b| b.iter(|| maximal_chains(black_box(&m16))));
    c.bench_function("lattice/ritt_first_m16", |b| b.iter(|| verify_ritt_first(black_box(&m16)).unwrap()));
    c.bench_function("lattice/rho_m16", |b| b.iter(|| verify_rho_bijection(black_box(&m16)).unwrap()));
    c.bench_function("lattice/catalog_contexts", |b| b.iter(|| fixtures::contexts().unwrap()));
}

criterion_group!(benches, lattice);
criterion_main!(benches);

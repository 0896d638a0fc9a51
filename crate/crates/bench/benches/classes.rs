use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use quadrank_bench::{recurrence_sweep, SWEEP_T_MAX};
use quadrank_core::pullback::averaged_quad_16_8;
use quadrank_core::{canonical_class, certify, quad_class, Catalog};

fn classes(c: &mut Criterion) {
    c.bench_function("quad_class t=8", |b| b.iter(|| quad_class(black_box(8)).unwrap()));
    c.bench_function("canonical_class 16,8", |b| b.iter(|| canonical_class(black_box(16), black_box(8)).unwrap()));
    c.bench_function("averaged_quad_16_8", |b| b.iter(|| averaged_quad_16_8().unwrap()));
}

fn certificates(c: &mut Criterion) {
    let catalog = Catalog::builtin();
    for (g, n) in [(16, 8), (17, 8), (12, 10)] {
        c.bench_function(&format!("certify {g},{n}"), |b| b.iter(|| certify(black_box(g), black_box(n), &catalog).unwrap()));
    }
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("recurrences", |b| b.iter(|| recurrence_sweep(black_box(SWEEP_T_MAX))));
    group.finish();
}

criterion_group!(benches, classes, certificates, sweeps);
criterion_main!(benches);

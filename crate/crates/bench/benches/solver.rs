use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use acquisition_core::generators;
use acquisition_core::solver;

fn exact_solver(c: &mut Criterion) {
    let petersen = generators::petersen();
    c.bench_function("solve petersen", |b| {
        b.iter(|| solver::unit_acquisition_number(black_box(&petersen), 1 << 24).unwrap())
    });

    let c10 = generators::cycle(10).unwrap();
    c.bench_function("solve cycle 10", |b| {
        b.iter(|| solver::unit_acquisition_number(black_box(&c10), 1 << 24).unwrap())
    });

    let p12 = generators::path(12).unwrap();
    c.bench_function("solve path 12", |b| {
        b.iter(|| solver::unit_acquisition_number(black_box(&p12), 1 << 24).unwrap())
    });
}

fn bounds(c: &mut Criterion) {
    let g45 = generators::chained_double_stars(4, 5).unwrap().graph;
    c.bench_function("min maximal matching g45", |b| {
        b.iter(|| solver::min_maximal_matching(black_box(&g45)).unwrap())
    });
    c.bench_function("cut lower bound g45", |b| {
        b.iter(|| solver::cut_lower_bound(black_box(&g45)).unwrap())
    });
}

criterion_group!(benches, exact_solver, bounds);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use acquisition_core::caterpillar;
use acquisition_core::generators;

fn linear_scan(c: &mut Criterion) {
    // One long caterpillar with a repeating leaf pattern.
    let code: Vec<usize> = (0..5_000).map(|i| [1, 2, 0, 1][i % 4]).collect();
    let big = generators::caterpillar_from_code(&code);
    let view = caterpillar::recognize(&big).unwrap();
    c.bench_function("caterpillar scan 5000-spine", |b| {
        b.iter(|| caterpillar::a_u_caterpillar(black_box(&view)))
    });

    let corpus = generators::enumerate_caterpillars(12);
    c.bench_function("caterpillar corpus n<=12 scan", |b| {
        b.iter(|| {
            for g in &corpus {
                let view = caterpillar::recognize(g).unwrap();
                black_box(caterpillar::a_u_caterpillar(&view));
            }
        })
    });
}

fn assignment(c: &mut Criterion) {
    // Eight leaves per spine vertex keep every internal run feasible.
    let code: Vec<usize> = vec![8; 30];
    let g = generators::caterpillar_from_code(&code);
    let view = caterpillar::recognize(&g).unwrap();
    c.bench_function("assignment 30-spine", |b| {
        b.iter(|| caterpillar::build_assignment(black_box(&view)).unwrap())
    });
}

criterion_group!(benches, linear_scan, assignment);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use steiner_tsp::generators::{random_biconnected, NamedGraph};
use steiner_tsp::{oracle, shortest_path_metric, solve_batch, solve_batch_seq, SolveConfig};

fn bench_held_karp(c: &mut Criterion) {
    let g = random_biconnected(15, 40, 7).unwrap();
    let metric = shortest_path_metric(&g).unwrap();
    let mut group = c.benchmark_group("held_karp_n15");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| oracle::held_karp_opt(black_box(&metric)).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| oracle::held_karp_opt_seq(black_box(&metric)).unwrap())
    });
    group.finish();
}

fn bench_cycle_search(c: &mut Criterion) {
    let g = random_biconnected(14, 22, 3).unwrap();
    let s: std::collections::BTreeSet<usize> = [0, 3, 6, 9, 12].into_iter().collect();
    let mut group = c.benchmark_group("steiner_search_n14");
    group.sample_size(20);
    group.bench_function("parallel", |b| {
        b.iter(|| oracle::brute_force_steiner_cycle(black_box(&g), &s, 18).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| oracle::brute_force_steiner_cycle_seq(black_box(&g), &s, 18).unwrap())
    });
    group.finish();
}

fn bench_solve_batch(c: &mut Criterion) {
    let graphs: Vec<_> = (0..32)
        .map(|seed| random_biconnected(11, 18, seed).unwrap())
        .collect();
    let cfg = SolveConfig::default();
    let mut group = c.benchmark_group("solve_batch_32x_n11");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| solve_batch(black_box(&graphs), &cfg))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| solve_batch_seq(black_box(&graphs), &cfg))
    });
    group.finish();
}

fn bench_petersen_pipeline(c: &mut Criterion) {
    let g = steiner_tsp::generators::named(NamedGraph::Petersen).unwrap();
    let cfg = SolveConfig::default();
    c.bench_function("solve_petersen", |b| {
        b.iter(|| steiner_tsp::solve(black_box(&g), &cfg).unwrap())
    });
}

criterion_group!(
    benches,
    bench_held_karp,
    bench_cycle_search,
    bench_solve_batch,
    bench_petersen_pipeline
);
criterion_main!(benches);

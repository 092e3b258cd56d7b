//! Benchmarks for the hot paths: canonical forms, the elimination check,
//! series-minor search, clutter enumeration, and rank-table construction.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use matroid_core::canonical::compute_canonical_key;
use matroid_core::construct::named::{named, NamedId};
use matroid_core::props::series_minor::{find_series_minor_path, SearchOptions};
use matroid_core::props::ssce_check;
use matroid_core::verify::enumerate_clutters;
use matroid_core::{CircuitFamily, Matroid};
use std::hint::black_box;

fn get(id: &str) -> Matroid {
    named(id.parse::<NamedId>().unwrap()).unwrap().matroid
}

fn bench_canonical_key(c: &mut Criterion) {
    let m = get("L:4"); // ten elements, the largest registry instance
    let masks: Vec<u64> = m.circuits().members().iter().map(|s| s.0).collect();
    c.bench_function("canonical_key_L4", |b| {
        b.iter(|| compute_canonical_key(black_box(m.ground_size()), black_box(&masks)))
    });
}

fn bench_ssce_check(c: &mut Criterion) {
    let m = get("L:1");
    c.bench_function("ssce_check_L1", |b| b.iter(|| ssce_check(black_box(&m)).holds));
}

fn bench_series_minor_search(c: &mut Criterion) {
    let host = get("L:1");
    let target = get("N5");
    let opts = SearchOptions { max_host: 12 };
    c.bench_function("series_minor_L1_to_N5", |b| {
        b.iter(|| find_series_minor_path(black_box(&host), black_box(&target), &opts).unwrap())
    });
}

fn bench_clutter_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_clutters_n4", |b| {
        b.iter(|| enumerate_clutters(black_box(4)).unwrap().count())
    });
}

fn bench_matroid_validation(c: &mut Criterion) {
    let m = get("MK4");
    let family = m.circuits().clone();
    c.bench_function("validate_and_rank_MK4", |b| {
        b.iter_batched(
            || family.clone(),
            |f: CircuitFamily| Matroid::new(f).unwrap().rank_full(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_canonical_key,
    bench_ssce_check,
    bench_series_minor_search,
    bench_clutter_enumeration,
    bench_matroid_validation
);
criterion_main!(benches);

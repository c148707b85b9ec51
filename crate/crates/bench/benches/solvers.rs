use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use treecover::covers::{half_order_cover, path_cover_exact, tree_cover_exact};
use treecover::forcing::{psd_zero_forcing_number, zero_forcing_number};
use treecover::graph::{canonical_form, enumerate_connected, is_outerplanar, treewidth};
use treecover_bench::fixtures;

fn exact_solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    group.sample_size(20);
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("tree_cover", name), &g, |b, g| {
            b.iter(|| tree_cover_exact(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("path_cover", name), &g, |b, g| {
            b.iter(|| path_cover_exact(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("psd_forcing", name), &g, |b, g| {
            b.iter(|| psd_zero_forcing_number(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("forcing", name), &g, |b, g| {
            b.iter(|| zero_forcing_number(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn structure(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("half_order_cover", name), &g, |b, g| {
            b.iter(|| half_order_cover(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("outerplanar", name), &g, |b, g| {
            b.iter(|| is_outerplanar(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("treewidth", name), &g, |b, g| {
            b.iter(|| treewidth(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("canonical_form", name), &g, |b, g| {
            b.iter(|| canonical_form(black_box(g)))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_connected(n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_solvers, structure, enumeration);
criterion_main!(benches);

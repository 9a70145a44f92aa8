use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ctree_core::oracle::{canonical_form, is_ctree};
use ctree_core::{Census, VariantFlag};

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("n5/all", |b| {
        b.iter(|| Census::enumerate(black_box(5), VariantFlag::ALL).unwrap())
    });
    group.bench_function("n6/no-two-cycles", |b| {
        b.iter(|| Census::enumerate(black_box(6), VariantFlag::NO_TWO_CYCLES).unwrap())
    });
    group.finish();
}

fn per_graph(c: &mut Criterion) {
    let census = Census::enumerate(6, VariantFlag::ALL).unwrap();
    let graphs: Vec<_> = census.representatives().collect();
    c.bench_function("is_ctree/56", |b| {
        b.iter(|| graphs.iter().filter(|g| is_ctree(black_box(g))).count())
    });
    c.bench_function("canonical_form/56", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| canonical_form(black_box(g)))
                .collect::<Vec<_>>()
        })
    });
    c.bench_function("rooted_counts/n6", |b| {
        b.iter(|| black_box(&census).counts())
    });
}

criterion_group!(benches, census, per_graph);
criterion_main!(benches);

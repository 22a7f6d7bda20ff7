use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use aura_bench::spaces;
use aura_topology::connectivity::a_components;
use aura_topology::covering::Cover;
use aura_topology::fixtures;
use aura_topology::search::{enumerate_topologies, implication_matrix};

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_topologies(4)", |b| {
        b.iter(|| enumerate_topologies(black_box(4)).unwrap().len())
    });
}

fn operators(c: &mut Criterion) {
    let three = spaces(3);
    c.bench_function("tau_a over all 3-point spaces", |b| {
        b.iter(|| three.iter().map(|s| s.tau_a().len()).sum::<usize>())
    });
    c.bench_function("closure of every subset over all 3-point spaces", |b| {
        b.iter(|| {
            three
                .iter()
                .flat_map(|s| s.full().subsets().map(move |a| s.closure(a)))
                .fold(0u64, |acc, x| acc ^ x.bits())
        })
    });
    let s1 = fixtures::s1();
    c.bench_function("a_components(S1)", |b| {
        b.iter(|| a_components(black_box(&s1)))
    });
    let opens: Vec<_> = s1.tau_a().opens().to_vec();
    let cover = Cover::new(s1.full(), opens);
    c.bench_function("minimal_subcover of tau_a(S1)", |b| {
        b.iter(|| cover.minimal_subcover_indices().unwrap())
    });
}

fn matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("matrix");
    group.sample_size(10);
    group.bench_function("implication_matrix(3)", |b| {
        b.iter(|| implication_matrix(3, 1).unwrap())
    });
    group.finish();
}

criterion_group!(benches, enumeration, operators, matrix);
criterion_main!(benches);

//! Benchmarks for the three hot paths: skew-morphism enumeration, dart
//! automorphism counting, and full classification at one n.

use cayleymap::catalog::{self, FamilyId};
use cayleymap::group::FiniteGroup;
use cayleymap::skew::enumerate_skew_morphisms;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_skew_morphisms");
    for n in [4usize, 6, 8] {
        let g = FiniteGroup::dihedral(n).unwrap();
        group.bench_with_input(BenchmarkId::new("dihedral", n), &g, |b, g| {
            b.iter(|| enumerate_skew_morphisms(black_box(g)).unwrap().len())
        });
    }
    group.finish();
}

fn bench_dart_automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("dart_automorphism_count");
    for n in [8usize, 12, 16] {
        let map = catalog::build_family(FamilyId::map1(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("map1", n), &map, |b, m| {
            b.iter(|| black_box(m).dart_system().automorphism_count())
        });
    }
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    group.sample_size(10);
    for n in [4usize, 6] {
        group.bench_with_input(BenchmarkId::new("dihedral", n), &n, |b, &n| {
            b.iter(|| catalog::classify(black_box(n), None).unwrap().classes.len())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_dart_automorphisms, bench_classify);
criterion_main!(benches);

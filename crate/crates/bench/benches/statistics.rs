use std::hint::black_box;

use coboson::cascade::{hom_dip, triple_distribution};
use coboson::figures::{dip_sweep, PurityGrid, Spacing};
use coboson::interference::pair_interference;
use coboson::oracle::{cascade_state, occupation_distribution};
use coboson::{BeamSplitterConvention, ChiTable, SchmidtDistribution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn chi_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_table");
    for modes in [100usize, 1_000, 10_000] {
        let d = SchmidtDistribution::peaked(0.25, modes).unwrap();
        group.bench_with_input(BenchmarkId::new("peaked", modes), &d, |b, d| {
            b.iter(|| ChiTable::new(black_box(d), 100))
        });
    }
    // Forces the log-domain path: chi_S underflows.
    let d = SchmidtDistribution::peaked(0.25, 1001).unwrap();
    group.bench_function("peaked_log_path_1001", |b| {
        b.iter(|| ChiTable::new(black_box(&d), 1001))
    });
    group.finish();
}

fn analytic(c: &mut Criterion) {
    let d =
        SchmidtDistribution::from_weights(&[0.3, 0.2, 0.15, 0.1, 0.1, 0.08, 0.05, 0.02]).unwrap();
    let t = ChiTable::new(&d, 8);
    c.bench_function("triple_distribution_n6", |b| {
        b.iter(|| triple_distribution(black_box(&t), 6).unwrap())
    });
    c.bench_function("pair_interference_3_3", |b| {
        b.iter(|| pair_interference(black_box(&d), 3, 3).unwrap())
    });
    let t = ChiTable::peaked_limit(1e-12, 1001).unwrap();
    c.bench_function("hom_dip_n1000", |b| {
        b.iter(|| hom_dip(black_box(&t), 1000).unwrap())
    });
    let grid = PurityGrid::new(Some(1e-12), 0.2, 200, Spacing::Log).unwrap();
    c.bench_function("dip_sweep_fig6", |b| {
        b.iter(|| dip_sweep(black_box(&[2, 6, 50, 1000]), &grid).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_cascade");
    group.sample_size(20);
    for modes in [6usize, 8, 10] {
        let d = SchmidtDistribution::uniform(modes).unwrap();
        group.bench_with_input(BenchmarkId::new("n3", modes), &d, |b, d| {
            b.iter(|| {
                let s = cascade_state(black_box(d), 3, BeamSplitterConvention::Symmetric).unwrap();
                occupation_distribution(&s)
            })
        });
    }
    group.finish();
}

criterion_group!(benches, chi_tables, analytic, oracle);
criterion_main!(benches);

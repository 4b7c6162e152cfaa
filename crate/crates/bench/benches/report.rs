use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcorr::{build_report, fixtures, hermitian_eigen, ProjectiveBasis};
use qcorr_bench::{dense_hermitian, dense_state};
use std::hint::black_box;

fn bench_eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("hermitian_eigen");
    for dim in [4, 9, 16, 36] {
        let m = dense_hermitian(dim);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &m, |b, m| {
            b.iter(|| hermitian_eigen(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn bench_report(c: &mut Criterion) {
    let qutrit = fixtures::qutrit_pair();
    let basis3 = ProjectiveBasis::computational(3);
    c.bench_function("build_report/qutrit_fixture", |b| {
        b.iter(|| build_report(black_box(&qutrit), &basis3, &basis3).unwrap())
    });

    let mut group = c.benchmark_group("build_report/dense");
    for d in [2, 3, 4] {
        let state = dense_state(d, d);
        let basis = ProjectiveBasis::computational(d);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{d}x{d}")),
            &state,
            |b, s| b.iter(|| build_report(black_box(s), &basis, &basis).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_eigen, bench_report);
criterion_main!(benches);

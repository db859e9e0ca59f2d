use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mheight::lp::exact_mheight_report;
use mheight::search::{domain_search_with, icosahedral_domain};
use mheight::{Exec, GeneratorMatrix};

fn lp(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_mheight");
    group.sample_size(10);
    let cases = [
        (
            "polygonal-12/m=5",
            GeneratorMatrix::dual_polygonal(12).unwrap(),
            5,
        ),
        ("icosahedral/m=3", GeneratorMatrix::dual_icosahedral(), 3),
        ("dodecahedral/m=5", GeneratorMatrix::dual_dodecahedral(), 5),
    ];
    for (name, g, m) in &cases {
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(
                BenchmarkId::new(format!("{exec:?}"), name),
                &exec,
                |b, &exec| b.iter(|| exact_mheight_report(g, *m, exec).unwrap()),
            );
        }
    }
    group.finish();
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("domain_search");
    group.sample_size(10);
    let g = GeneratorMatrix::dual_icosahedral();
    let domain = icosahedral_domain();
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(
            BenchmarkId::new(format!("{exec:?}"), "icosahedral/m=3"),
            &exec,
            |b, &exec| b.iter(|| domain_search_with(&g, 3, &domain, 300, exec).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, lp, search);
criterion_main!(benches);

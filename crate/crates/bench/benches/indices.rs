use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use topolab_core::{
    closed_index, edge_partition, index_exact, run_sweep, Family, FamilySpec, IndexKind,
    SweepConfig,
};

fn oracle_vs_closed(c: &mut Criterion) {
    let mut group = c.benchmark_group("corona_cycles_eso");
    for n in [10u64, 20, 30] {
        let spec = FamilySpec::new(Family::CoronaCycles, n, n).unwrap();
        let g = spec.build();
        group.bench_with_input(BenchmarkId::new("index_exact", n), &g, |b, g| {
            b.iter(|| index_exact(g, IndexKind::Eso))
        });
        group.bench_with_input(BenchmarkId::new("closed_index", n), &spec, |b, spec| {
            b.iter(|| closed_index(spec, IndexKind::Eso))
        });
    }
    group.finish();
}

fn products(c: &mut Criterion) {
    let spec = FamilySpec::new(Family::JoinPaths, 30, 30).unwrap();
    c.bench_function("build join-paths 30x30", |b| b.iter(|| spec.build()));
    let g = spec.build();
    c.bench_function("edge_partition join-paths 30x30", |b| {
        b.iter(|| edge_partition(&g))
    });
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let cfg = SweepConfig::new(
        Family::ALL.to_vec(),
        vec![IndexKind::Eso, IndexKind::Eu],
        10,
        10,
    );
    group.bench_function("all families 10x10", |b| {
        b.iter(|| run_sweep(&cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, oracle_vs_closed, products, sweep);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hidden_ties::communities::{clique_report, Algorithm, DEFAULT_WALK_LENGTH};
use hidden_ties::metrics::{aggregate_report, betweenness};
use hidden_ties::{largest_component, project, Normalization, ProjectionSide};
use hidden_ties_bench::{corpus, projected};

fn projection(c: &mut Criterion) {
    let mut group = c.benchmark_group("projection");
    for factor in [1, 4] {
        let g = corpus(factor);
        group.bench_with_input(BenchmarkId::from_parameter(factor), &g, |b, g| {
            b.iter(|| project(g, ProjectionSide::Actors).unwrap())
        });
    }
    group.finish();
}

fn paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("paths");
    for factor in [1, 4] {
        let g = largest_component(&projected(factor)).unwrap();
        group.bench_with_input(BenchmarkId::new("betweenness", factor), &g, |b, g| {
            b.iter(|| betweenness(g, Normalization::Raw))
        });
        group.bench_with_input(BenchmarkId::new("report", factor), &g, |b, g| {
            b.iter(|| aggregate_report(g).unwrap())
        });
    }
    group.finish();
}

fn communities(c: &mut Criterion) {
    let g = projected(1);
    let mut group = c.benchmark_group("communities");
    group.sample_size(10);
    for algorithm in [
        Algorithm::ClausetNewmanMoore,
        Algorithm::WakitaTsurumi,
        Algorithm::Walktrap {
            walk_length: DEFAULT_WALK_LENGTH,
        },
        Algorithm::GirvanNewman,
    ] {
        group.bench_function(algorithm.short_name(), |b| {
            b.iter(|| algorithm.run(&g).unwrap())
        });
    }
    group.finish();
}

fn cliques(c: &mut Criterion) {
    let g = projected(1);
    c.bench_function("cliques", |b| b.iter(|| clique_report(&g, 3).unwrap()));
}

criterion_group!(benches, projection, paths, communities, cliques);
criterion_main!(benches);

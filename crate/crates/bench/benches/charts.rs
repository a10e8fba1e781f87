use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polyfaces::charts::{blend_projection, chart, identify_stratum, path_limit, BlendConfig, ChartKind, Space};
use polyfaces_bench::{even_configuration, nested_path};

fn charts(c: &mut Criterion) {
    let mut group = c.benchmark_group("chart");
    for kind in ChartKind::ALL {
        for n in [3, 6, 9] {
            let t = even_configuration(n);
            group.bench_with_input(BenchmarkId::new(kind.to_string(), n), &t, |b, t| b.iter(|| chart(kind, black_box(t))));
        }
    }
    group.finish();
}

fn blend(c: &mut Criterion) {
    let p = chart(ChartKind::Beta, &even_configuration(6));
    c.bench_function("blend/6", |b| b.iter(|| blend_projection(black_box(&p), BlendConfig::Exponential).unwrap()));
}

fn limits(c: &mut Criterion) {
    let path = nested_path(6);
    c.bench_function("path_limit/gamma/6", |b| b.iter(|| path_limit(black_box(&path), ChartKind::Gamma).unwrap()));
    let mut group = c.benchmark_group("stratum");
    for space in Space::ALL {
        group.bench_function(space.to_string(), |b| b.iter(|| identify_stratum(black_box(&path), space).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, charts, blend, limits);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polyfaces::functors::{Functor, Projection};
use polyfaces::poset::face_poset;
use polyfaces::topology::{cofinality_report, contractibility, order_complex};
use polyfaces::tree::Species;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("face_poset");
    for species in [Species::Psi, Species::Phi, Species::PsiLevel] {
        for n in 2..=4 {
            group.bench_with_input(BenchmarkId::new(species.to_string(), n), &n, |b, &n| {
                b.iter(|| face_poset(black_box(species), n).unwrap())
            });
        }
    }
    group.finish();
}

fn projections(c: &mut Criterion) {
    let mut group = c.benchmark_group("cofinality");
    group.sample_size(10);
    for functor in [Functor::Pi, Functor::PiPrime, Functor::PiDoublePrime] {
        group.bench_function(BenchmarkId::new(functor.to_string(), 3), |b| {
            b.iter(|| cofinality_report(&Projection::new(functor, 3).unwrap().map).unwrap())
        });
    }
    group.finish();
}

fn homology(c: &mut Criterion) {
    let complex = order_complex(&face_poset(Species::Phi, 3).unwrap());
    c.bench_function("contractibility/phi/3", |b| b.iter(|| contractibility(black_box(&complex)).unwrap()));
}

criterion_group!(benches, enumeration, projections, homology);
criterion_main!(benches);

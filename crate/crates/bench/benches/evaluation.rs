use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ellint_core::verify::{a_grid, modulus_grid};
use ellint_core::*;
use std::hint::black_box;

fn integrals(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let a = Param::new(0.3).unwrap();
    let mut group = c.benchmark_group("ellk_gen");
    for (label, p) in [
        ("r=0.1", ModulusPoint::new(0.1).unwrap()),
        ("r=0.9", ModulusPoint::new(0.9).unwrap()),
        ("r'^2=0.06", ModulusPoint::from_rp2(0.06).unwrap()),
        ("r'^2=1e-8", ModulusPoint::from_rp2(1e-8).unwrap()),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(label), &p, |b, &p| {
            b.iter(|| ellk_gen(black_box(a), black_box(p), &cfg))
        });
    }
    group.finish();

    let p = ModulusPoint::new(0.9).unwrap();
    c.bench_function("elle_gen r=0.9", |b| {
        b.iter(|| elle_gen(black_box(a), black_box(p), &cfg))
    });
    c.bench_function("em_combo r=0.9", |b| {
        b.iter(|| em_combo(black_box(a), black_box(p), &cfg))
    });
}

fn ramanujan(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let x = RArgument::new(0.37).unwrap();
    c.bench_function("r_def", |b| b.iter(|| r_def(black_box(x))));
    c.bench_function("r_series", |b| b.iter(|| r_series(black_box(x), &cfg)));
    c.bench_function("digamma 0.37", |b| b.iter(|| digamma(black_box(0.37))));
}

fn bounds(c: &mut Criterion) {
    let cfg = EvalConfig::default();
    let a = Param::new(0.25).unwrap();
    let p = ModulusPoint::new(1e-6).unwrap();
    c.bench_function("envelope r=1e-6", |b| {
        b.iter(|| envelope(black_box(a), black_box(p), &cfg))
    });
    c.bench_function("f_lemma33 r=0.5", |b| {
        b.iter(|| f_lemma33(black_box(a), ModulusPoint::new(0.5).unwrap(), &cfg))
    });
    c.bench_function("sharpness_scan upper", |b| {
        let lambda = sharp_constants(a).beta0 - 0.01;
        b.iter(|| sharpness_scan(black_box(a), lambda, Side::Upper, &cfg))
    });

    let a_pts = a_grid(20);
    let r_pts = modulus_grid(1e-6, 1e-10, 200);
    let mut group = c.benchmark_group("envelope_scan");
    group.sample_size(20);
    group.bench_function("20x200", |b| b.iter(|| envelope_scan(&a_pts, &r_pts, &cfg)));
    group.finish();
}

criterion_group!(benches, integrals, ramanujan, bounds);
criterion_main!(benches);

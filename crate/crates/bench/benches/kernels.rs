use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use dmm_bench::{corpus_pair, scaled_simplex, univariate_pair, wilkinson_like};
use dmm_core::bounds::{dmm_n_bounds, table1};
use dmm_core::harness::oracle_roots_2d;
use dmm_core::milne::{build_volume_function, isolate, IsolateOptions};
use dmm_core::newton::{mixed_volume, system_profile};
use dmm_core::univar::{isolate_real_roots, resultant, subresultant_seq};

fn univariate(c: &mut Criterion) {
    let mut g = c.benchmark_group("univariate");
    for d in [4usize, 8, 16] {
        let (f, h) = univariate_pair(d);
        g.bench_with_input(BenchmarkId::new("resultant", d), &d, |b, _| b.iter(|| resultant(black_box(&f), &h)));
        g.bench_with_input(BenchmarkId::new("subresultants", d), &d, |b, _| {
            b.iter(|| subresultant_seq(black_box(&f), &h))
        });
    }
    for d in [5i64, 10, 20] {
        let f = wilkinson_like(d);
        g.bench_with_input(BenchmarkId::new("isolate", d), &d, |b, _| b.iter(|| isolate_real_roots(black_box(&f))));
    }
    g.finish();
}

fn geometry(c: &mut Criterion) {
    let mut g = c.benchmark_group("geometry");
    for d in [2i64, 4, 8] {
        let s2 = scaled_simplex(2, d);
        let s3 = scaled_simplex(3, d);
        g.bench_with_input(BenchmarkId::new("mixed_volume_2d", d), &d, |b, _| {
            b.iter(|| mixed_volume(black_box(&[s2.clone(), s2.clone()])))
        });
        g.bench_with_input(BenchmarkId::new("mixed_volume_3d", d), &d, |b, _| {
            b.iter(|| mixed_volume(black_box(&[s3.clone(), s3.clone(), s3.clone()])))
        });
    }
    g.finish();
}

fn bounds(c: &mut Criterion) {
    let (f, g) = corpus_pair("cubic_pair");
    let polys = [f, g];
    c.bench_function("bounds/profile_cubic_pair", |b| b.iter(|| system_profile(black_box(&polys))));
    let p = system_profile(&polys).unwrap();
    c.bench_function("bounds/dmm_n_cubic_pair", |b| b.iter(|| dmm_n_bounds(black_box(&p), 3)));
    c.bench_function("bounds/table1", |b| b.iter(table1));
}

fn bivariate(c: &mut Criterion) {
    let mut g = c.benchmark_group("bivariate");
    g.sample_size(10);
    for name in ["circle_line", "two_circles", "canny_2_2_10", "cubic_pair"] {
        let (f, h) = corpus_pair(name);
        g.bench_function(BenchmarkId::new("volume_function", name), |b| {
            b.iter(|| build_volume_function(black_box(&f), &h))
        });
        g.bench_function(BenchmarkId::new("isolate", name), |b| {
            b.iter(|| isolate(black_box(&f), &h, &IsolateOptions::default()))
        });
        g.bench_function(BenchmarkId::new("oracle", name), |b| b.iter(|| oracle_roots_2d(black_box(&f), &h)));
    }
    g.finish();
}

criterion_group!(benches, univariate, geometry, bounds, bivariate);
criterion_main!(benches);

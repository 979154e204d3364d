//! Parallel vs sequential render kernels.
//!
//! `render_*` uses the rayon row partition when the `parallel` feature
//! (default) is on; `render_*_seq` is the same kernel driven by a plain
//! loop. Outputs are byte-identical, so the comparison is pure scheduling
//! overhead vs speedup.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperfract::render::{
    render_julia, render_julia_seq, render_mandelbrot, render_mandelbrot_seq,
};
use hyperfract::{BoundednessVariant, HyperParam, Region, SampleMode};

const DEPTH: u32 = 500;

fn mandelbrot(c: &mut Criterion) {
    let region = Region::new(-2.5, 2.5, -2.5, 2.5).unwrap();
    let mut group = c.benchmark_group("mandelbrot_iterative");
    group.sample_size(10);
    for size in [128u32, 256, 512] {
        group.bench_with_input(BenchmarkId::new("parallel", size), &size, |b, &s| {
            b.iter(|| {
                render_mandelbrot(
                    region,
                    s,
                    s,
                    DEPTH,
                    BoundednessVariant::Component,
                    SampleMode::Iterative,
                )
                .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("sequential", size), &size, |b, &s| {
            b.iter(|| {
                render_mandelbrot_seq(
                    region,
                    s,
                    s,
                    DEPTH,
                    BoundednessVariant::Component,
                    SampleMode::Iterative,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn julia(c: &mut Criterion) {
    let param = HyperParam::new(-1.0, 0.3).unwrap();
    let region = Region::new(-2.0, 2.0, -2.0, 2.0).unwrap();
    let mut group = c.benchmark_group("julia_iterative");
    group.sample_size(10);
    for size in [128u32, 256, 512] {
        group.bench_with_input(BenchmarkId::new("parallel", size), &size, |b, &s| {
            b.iter(|| render_julia(param, region, s, s, DEPTH, SampleMode::Iterative).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", size), &size, |b, &s| {
            b.iter(|| render_julia_seq(param, region, s, s, DEPTH, SampleMode::Iterative).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, mandelbrot, julia);
criterion_main!(benches);

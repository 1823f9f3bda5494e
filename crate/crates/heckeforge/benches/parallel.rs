//! Parallel versus sequential paths of the numeric oracle.
//!
//! The sequential variants run the same per-item work in a plain loop, so the
//! comparison isolates the data-parallel overhead and speedup.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use heckeforge::padic::{weil_gamma, AdditiveCharacter, PadicNum};
use heckeforge::par;
use num_complex::Complex64;

fn phase(i: usize) -> Complex64 {
    let t = (i as f64) * 0.001;
    Complex64::new(t.cos(), t.sin())
}

fn bench_tree_sum(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_sum");
    for &n in &[1usize << 12, 1 << 16, 1 << 20] {
        g.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| {
            b.iter(|| par::tree_sum(black_box(n), phase))
        });
        g.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| (0..black_box(n)).map(phase).sum::<Complex64>())
        });
    }
    g.finish();
}

fn bench_gamma_batch(c: &mut Criterion) {
    let p = 3;
    let psi = AdditiveCharacter::standard(p, 16);
    let inputs: Vec<PadicNum> = (1..=48i64)
        .filter(|x| x % 3 != 0)
        .map(|x| PadicNum::from_i64(p, x, 16).unwrap().shift(x % 4))
        .collect();
    let mut g = c.benchmark_group("weil_gamma_batch");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| par::map(black_box(&inputs), |a| weil_gamma(&psi, a).unwrap()))
    });
    g.bench_function("sequential", |b| {
        b.iter(|| {
            black_box(&inputs)
                .iter()
                .map(|a| weil_gamma(&psi, a).unwrap())
                .collect::<Vec<_>>()
        })
    });
    g.finish();
}

criterion_group!(benches, bench_tree_sum, bench_gamma_batch);
criterion_main!(benches);

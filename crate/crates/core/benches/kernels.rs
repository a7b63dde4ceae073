use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use twistcheck::hopf::cocycle_residual;
use twistcheck::par;
use twistcheck::reps::{fundamental_rep, qybe_check, rp_matrix};
use twistcheck::scalars::Rat;
use twistcheck::twists::{build_f3bar_aff, f3bar_context};

/// Worker counts to compare; 1 is the sequential baseline. Builds without the
/// `parallel` feature run the plain loops for every count.
fn workers() -> Vec<usize> {
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut w = vec![1];
    if max > 1 {
        w.push(max);
    }
    w
}

fn label() -> &'static str {
    if par::is_parallel() {
        "rayon"
    } else {
        "sequential"
    }
}

fn qybe(c: &mut Criterion) {
    let v = fundamental_rep(4).unwrap();
    let r = rp_matrix(4, &Rat::new(2, 1), &v).unwrap();
    let mut g = c.benchmark_group(format!("qybe_n4/{}", label()));
    g.sample_size(10);
    for w in workers() {
        g.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| par::with_workers(w, || qybe_check(black_box(&r), 4).unwrap()))
        });
    }
    g.finish();
}

fn cocycle(c: &mut Criterion) {
    let ctx = f3bar_context().unwrap();
    let f = build_f3bar_aff(&ctx, 3).unwrap();
    let mut g = c.benchmark_group(format!("cocycle_f3bar_order3/{}", label()));
    g.sample_size(10);
    for w in workers() {
        g.bench_with_input(BenchmarkId::from_parameter(w), &w, |b, &w| {
            b.iter(|| par::with_workers(w, || cocycle_residual(black_box(&f), &ctx.table, 3).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(kernels, qybe, cocycle);
criterion_main!(kernels);

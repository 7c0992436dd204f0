use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use granulab::fuzznum::{brute_force_extend, extend_binary, DEFAULT_RESOLUTION};
use granulab::{closure_table, ApproxConfig, TNorm};
use granulab_bench::{builtin_termsets, operands};

fn scalar_tnorms(c: &mut Criterion) {
    let mut group = c.benchmark_group("tnorm_eval");
    let selectors = [
        TNorm::MIN,
        TNorm::PRODUCT,
        TNorm::schweizer(-0.5).unwrap(),
        TNorm::schweizer(2.0).unwrap(),
        TNorm::frank(1e6).unwrap(),
    ];
    for t in selectors {
        group.bench_function(t.to_string(), |b| {
            b.iter(|| {
                let mut acc = 0.0;
                for i in 1..100 {
                    acc += t.eval(black_box(i as f64 / 100.0), black_box(0.37));
                }
                acc
            })
        });
    }
    group.finish();
}

fn extension(c: &mut Criterion) {
    let (x, y) = operands();
    let t = TNorm::schweizer(0.5).unwrap();
    c.bench_function("extend_binary/101", |b| {
        b.iter(|| {
            extend_binary(
                |u, v| t.eval(u, v),
                black_box(&x),
                black_box(&y),
                DEFAULT_RESOLUTION,
            )
        })
    });
    let mut slow = c.benchmark_group("oracle");
    slow.sample_size(10);
    slow.bench_function("brute_force/301", |b| {
        b.iter(|| brute_force_extend(|u, v| t.eval(u, v), black_box(&x), black_box(&y), 301))
    });
    slow.finish();
}

fn closure(c: &mut Criterion) {
    let cfg = ApproxConfig::default();
    let t = TNorm::schweizer(-0.3).unwrap();
    let mut group = c.benchmark_group("closure_table");
    for ts in builtin_termsets() {
        group.bench_with_input(BenchmarkId::from_parameter(ts.name()), &ts, |b, ts| {
            b.iter(|| closure_table(&t, ts, &cfg, DEFAULT_RESOLUTION).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, scalar_tnorms, extension, closure);
criterion_main!(benches);

//! Sequential against rayon execution for the two data-parallel kernels:
//! the identity check and the per-class Pascal enumeration.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use leibniz_core::combinatorics::pascal_identity_classes;
use leibniz_core::identity::{check_fundamental_identity, IdentityOptions};
use leibniz_core::io::builtin_algebra;
use leibniz_core::par::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Execution::default()));
    }
    v
}

fn identity(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity");
    group.sample_size(10);
    for name in ["ex3_3:8", "filippov:4"] {
        let sc = builtin_algebra(name).unwrap();
        for (label, exec) in modes() {
            let opts = IdentityOptions {
                exec,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(label, name), &sc, |b, sc| {
                b.iter(|| check_fundamental_identity(black_box(sc), &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn pascal_classes(c: &mut Criterion) {
    let mut group = c.benchmark_group("pascal_classes");
    for (label, exec) in modes() {
        group.bench_function(BenchmarkId::new(label, "n=8 r=3"), |b| {
            b.iter(|| pascal_identity_classes(black_box(8), 3, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, identity, pascal_classes);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use skewlen_bench::{lpoly, powers, tower};

fn field_mul(c: &mut Criterion) {
    let tw = tower();
    let xs = powers(&tw, 256);
    c.bench_function("gf4096_mul_256", |b| {
        b.iter(|| {
            let mut acc = skewlen::Element::ONE;
            for &x in &xs {
                acc = tw.mul(black_box(acc), x);
            }
            acc
        })
    });
}

fn symbolic_product(c: &mut Criterion) {
    let tw = tower();
    let mut group = c.benchmark_group("lpoly_symbolic_product");
    for len in [2, 4, 6] {
        let f = lpoly(&tw, len, 0);
        let g = lpoly(&tw, len, 7);
        group.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, _| {
            b.iter(|| f.symbolic_product(black_box(&g), &tw).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, field_mul, symbolic_product);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, Criterion};
use std::str::FromStr;

use skewlen::{run_sweep, Grid, SweepConfig};

fn small_sweep(c: &mut Criterion) {
    let grid = Grid::from_str("q=2;m=2;n=3,5|q=2;m=2;r=1;n=2").unwrap();
    let cfg = SweepConfig::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("gf4_small", |b| b.iter(|| run_sweep(&grid, &cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, small_sweep);
criterion_main!(benches);

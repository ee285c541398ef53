use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use metricdim::families::{grid_corona, kn_pm_corona};
use metricdim::metric_dimension_exact;

fn exact_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_solve");
    for inst in [
        grid_corona(3, 2),
        grid_corona(4, 3),
        grid_corona(5, 5),
        kn_pm_corona(5, 3),
    ] {
        group.bench_function(inst.name(), |b| {
            b.iter(|| metric_dimension_exact(black_box(&inst.graph)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_solve);
criterion_main!(benches);

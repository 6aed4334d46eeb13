//! Parallel pool versus a single worker on the data-parallel workloads.
//! Build with `--no-default-features` to time the sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use bireversible::action::Engine;
use bireversible::canon::Policy;
use bireversible::catalog::{catalog_caps, enumerate, enumerate_vh4};
use bireversible::corpus;
use bireversible::ops::dual;
use bireversible::rf::compute_pm;

type Workload = Box<dyn Fn() + Sync>;

fn workloads() -> Vec<(&'static str, Workload)> {
    let e = Engine::new(&dual(&corpus::delta_d())).expect("engine");
    vec![
        ("enumerate_2x2", Box::new(|| {
            enumerate(2, 2, Policy::Dual, catalog_caps()).expect("enumerates");
        })),
        ("vh4", Box::new(|| {
            enumerate_vh4(catalog_caps());
        })),
        ("pm_m2", Box::new(move || {
            compute_pm(&e, 2, 3, 3);
        })),
    ]
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("engine");
    group.sample_size(10);
    let threads = [None, Some(1)];
    for (name, work) in workloads() {
        for t in threads {
            let mut b = ThreadPoolBuilder::new();
            if let Some(n) = t {
                b = b.num_threads(n);
            }
            let pool = b.build().expect("pool");
            let label = t.map_or("pool".to_string(), |n| format!("{n}-thread"));
            group.bench_function(BenchmarkId::new(name, label), |bencher| {
                pool.install(|| bencher.iter(&work))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use opcohom::algebra::{examples, ModulePresentation};
use opcohom::hodge::{hochschild_complex, HochschildSpec, Variant};
use opcohom::linalg::rank;
use opcohom::symgroup::shuffle_spectrum;
use opcohom::Matrix;

fn workloads() -> Vec<(&'static str, Matrix)> {
    let a = examples::plane_cubic_truncation();
    let m = ModulePresentation::regular(&a);
    let c = hochschild_complex(&HochschildSpec::new(&a, &m, Variant::Cochain, 4)).unwrap();
    let t = examples::truncated_polynomial(3);
    let ct = hochschild_complex(&HochschildSpec::new(&t, &ModulePresentation::regular(&t), Variant::Chain, 8)).unwrap();
    vec![("plane cubic δ₃", c.differential(3)), ("cubic b₈", ct.differential(8))]
}

#[cfg(feature = "parallel")]
fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let n = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut out = vec![("sequential".to_string(), rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap())];
    out.push((format!("parallel-{n}"), rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap()));
    out
}

#[cfg(feature = "parallel")]
fn run<R: Send>(pool: &rayon::ThreadPool, f: impl FnOnce() -> R + Send) -> R {
    pool.install(f)
}

#[cfg(not(feature = "parallel"))]
fn pools() -> Vec<(String, ())> {
    vec![("sequential".to_string(), ())]
}

#[cfg(not(feature = "parallel"))]
fn run<R>(_: &(), f: impl FnOnce() -> R) -> R {
    f()
}

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("rank");
    group.sample_size(10);
    for (name, m) in workloads() {
        for (label, pool) in pools() {
            group.bench_with_input(BenchmarkId::new(label, name), &m, |b, m| b.iter(|| run(&pool, || rank(black_box(m)))));
        }
    }
    group.finish();

    let mut group = c.benchmark_group("shuffle spectrum");
    group.sample_size(10);
    for (label, pool) in pools() {
        group.bench_function(BenchmarkId::new(label, 5), |b| b.iter(|| run(&pool, || shuffle_spectrum(black_box(5)).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, elimination);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::SeedableRng;

use twinline::exec::Exec;
use twinline::kernel::{separable, verify_certificate, Point, Space};
use twinline::sample;

fn pairs(space: &Space, n: usize) -> Vec<(Point, Point)> {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (p, q) = (sample::point(&mut rng, space), sample::point(&mut rng, space));
        if p != q {
            out.push((p, q));
        }
    }
    out
}

fn separate_and_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("separate+verify");
    for space in [Space::Feather, Space::Multi(twinline::multiline::SpaceSpec::fold(3))] {
        let batch = pairs(&space, 2000);
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), &space), &batch, |b, batch| {
                b.iter(|| {
                    exec.all(batch, |(p, q)| {
                        let (_, cert) = separable(&space, p, q).expect("valid pair");
                        verify_certificate(&space, &cert)
                    })
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, separate_and_verify);
criterion_main!(benches);

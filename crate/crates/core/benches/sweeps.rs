//! Sequential vs parallel on the three heaviest sweeps. Without the
//! `parallel` feature both arms run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use su3st::numerics::{Complex64, ExactScalar};
use su3st::par::{self, ExecMode};
use su3st::su3::{self, Branch, StructureConstants};
use su3st::suite::{self, FloatContext};
use su3st::transforms::{SpacetimeGenerators, TransformParams};

const MODES: [(&str, ExecMode); 2] = [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)];

fn fd_identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("fd-identities");
    let float = StructureConstants::<Complex64>::fundamental();
    let exact = StructureConstants::<ExactScalar>::fundamental();
    g.sample_size(20);
    for (name, mode) in MODES {
        g.bench_function(BenchmarkId::new("float", name), |b| {
            b.iter(|| su3::verify_fd_identities(black_box(&float), mode))
        });
        g.bench_function(BenchmarkId::new("exact", name), |b| {
            b.iter(|| su3::verify_fd_identities(black_box(&exact), mode))
        });
    }
    g.finish();
}

fn invariance(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariance-probes");
    let ctx = FloatContext::new(&StructureConstants::fundamental());
    g.sample_size(10);
    for (name, mode) in MODES {
        g.bench_function(name, |b| b.iter(|| suite::invariance_probes(&ctx, suite::DEFAULT_SEED, mode)));
    }
    g.finish();
}

fn lorentz_batch(c: &mut Criterion) {
    let mut g = c.benchmark_group("lorentz9-batch");
    let gens = SpacetimeGenerators::standard();
    let params: Vec<TransformParams> = (0..256)
        .map(|i| {
            let mut rng = suite::probe_rng(1, 0, i);
            TransformParams {
                theta: suite::random_angles(&mut rng),
                phi: suite::random_ball(&mut rng, 1.0),
                a: [0.0; 9],
                branch: if i % 2 == 0 { Branch::Plus } else { Branch::Minus },
            }
        })
        .collect();
    for (name, mode) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| par::map_indices(params.len(), mode, |i| gens.lorentz9(&params[i]).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, fd_identities, invariance, lorentz_batch);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cmreg_bench::sample_ideals;
use cmreg_core::harness::family::family_ideals;
use cmreg_core::harness::{run_suite, SuiteConfig};
use cmreg_core::homology::betti_multigraded;
use cmreg_core::resolution::minimal_resolution;
use cmreg_core::taylor::taylor_betti;
use cmreg_core::{default_var_names, FieldSpec, PolyRing, Rationals, TermOrder};

fn monomial_engines(c: &mut Criterion) {
    let ideals = sample_ideals(20, 4, 5, 3);
    let mut group = c.benchmark_group("monomial");
    group.bench_function("homology", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(betti_multigraded(i, FieldSpec::Rational).unwrap());
            }
        })
    });
    group.bench_function("taylor", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(taylor_betti(i, FieldSpec::Rational).unwrap());
            }
        })
    });
    group.finish();
}

fn family_resolution(c: &mut Criterion) {
    let ring = PolyRing::new(default_var_names(4), TermOrder::DegRevLex, Rationals);
    let mut group = c.benchmark_group("family_k");
    group.sample_size(10);
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let (_, _, k, _) = family_ideals(&ring, m, n);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{m}x{n}")), &k, |b, k| {
            b.iter(|| minimal_resolution(k).unwrap())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut config = SuiteConfig::standard(1);
    for v in config.trials.values_mut() {
        *v = 10;
    }
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    group.bench_function("ten_trials_each", |b| b.iter(|| run_suite(&config).unwrap()));
    group.finish();
}

criterion_group!(benches, monomial_engines, family_resolution, suite);
criterion_main!(benches);

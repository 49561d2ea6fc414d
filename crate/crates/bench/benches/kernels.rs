use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qiso_bench::{cancelling_syllables, truncation};
use qiso_core::action::{ad_u, build_u, EquivariantRep};
use qiso_core::freeprod::Word;
use qiso_core::podles::{build_pi, commutant, CommutantOptions};

fn word_reduce(c: &mut Criterion) {
    let mut g = c.benchmark_group("word_reduce");
    for len in [64, 1024, 16384] {
        let raw = cancelling_syllables(len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &raw, |b, raw| {
            b.iter(|| Word::reduce(black_box(raw.clone())))
        });
    }
    g.finish();
}

fn adjoint_action(c: &mut Criterion) {
    let mut g = c.benchmark_group("ad_u");
    for m in [16, 32, 64] {
        let t = truncation(m);
        let gens = build_pi(&t).unwrap();
        let u = build_u(&EquivariantRep::universal(m), m).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, _| b.iter(|| ad_u(black_box(&gens.b), &u)));
    }
    g.finish();
}

fn commutant_dimension(c: &mut Criterion) {
    let mut g = c.benchmark_group("commutant");
    g.sample_size(10);
    for m in [8, 16] {
        let gens = build_pi(&truncation(m)).unwrap().generating_set();
        g.bench_with_input(BenchmarkId::from_parameter(m), &gens, |b, gens| {
            b.iter(|| commutant(black_box(gens), &CommutantOptions::default()).dimension)
        });
    }
    g.finish();
}

criterion_group!(benches, word_reduce, adjoint_action, commutant_dimension);
criterion_main!(benches);

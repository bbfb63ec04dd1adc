use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qutrit_bench::{construction, ct_word, dense_pair, flat_construction, registry};
use qutrit_core::adjoint::{
    adjoint_of, pattern_equiv, single_qutrit_ct_obstruction, ResiduePattern,
};
use qutrit_core::analysis::{hierarchy_level, is_clifford, matrix_ring_certificate};
use qutrit_core::catalog::run_catalog;
use qutrit_core::circuit::expand_macros_exact;
use qutrit_core::rings::{RingTag, Z3};
use qutrit_core::sim::{circuit_matrix, single_gate_matrix};

fn rings(c: &mut Criterion) {
    let (a, b) = dense_pair();
    c.bench_function("cyclo_mul", |bench| {
        bench.iter(|| black_box(&a) * black_box(&b))
    });
    c.bench_function("cyclo_inv", |bench| bench.iter(|| black_box(&b).inv()));
}

fn simulation(c: &mut Criterion) {
    let reg = registry();
    let r = construction(&reg);
    let flat = flat_construction(&reg);
    c.bench_function("expand_r_construction", |b| {
        b.iter(|| expand_macros_exact(black_box(&r), &reg))
    });
    c.bench_function("simulate_r_construction_flat", |b| {
        b.iter(|| circuit_matrix(black_box(&flat)))
    });
}

fn analysis(c: &mut Criterion) {
    let u = ct_word();
    let r = single_gate_matrix(qutrit_core::circuit::SingleGate::R);
    let cx =
        circuit_matrix(&qutrit_core::circuit::parse_circuit("qutrits 2\nCX 0 1\nH 1").unwrap())
            .unwrap();
    c.bench_function("is_clifford_2q", |b| b.iter(|| is_clifford(black_box(&cx))));
    c.bench_function("hierarchy_r_cap4", |b| {
        b.iter(|| hierarchy_level(black_box(&r), 4))
    });
    c.bench_function("ring_certificate_tzeta", |b| {
        b.iter(|| matrix_ring_certificate(black_box(&u), RingTag::Tzeta))
    });
    c.bench_function("adjoint_of", |b| b.iter(|| adjoint_of(black_box(&u))));
    c.bench_function("obstruction", |b| {
        b.iter(|| single_qutrit_ct_obstruction(black_box(&u)))
    });
    let p = ResiduePattern::from_values([[1, 2, 0, 1], [0, 1, 2, 2], [2, 1, 0, 0], [1, 1, 1, 0]]);
    let q = ResiduePattern::bordered(Z3::ONE);
    c.bench_function("pattern_equiv_worst_case", |b| {
        b.iter(|| pattern_equiv(black_box(&p), black_box(&q)))
    });
}

fn catalog(c: &mut Criterion) {
    let reg = registry();
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("run_catalog", |b| b.iter(|| run_catalog(black_box(&reg))));
    group.finish();
}

criterion_group!(benches, rings, simulation, analysis, catalog);
criterion_main!(benches);

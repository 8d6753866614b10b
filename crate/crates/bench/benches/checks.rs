use criterion::{criterion_group, criterion_main, Criterion};
use csym::bialgebra::{cocycle_check_constants, cocycle_violation_direct, equivalence_report, Side};
use csym::search::{enumerate_structures, SearchSpec};
use csym::{Algebra, Bialgebra, Tensor3};
use std::hint::black_box;

fn sample_c() -> Tensor3 {
    Tensor3::from_entries(3, &[(0, 1, 2, -1), (1, 0, 0, 1), (2, 2, 1, 1), (1, 1, 1, -1)])
}

fn verified() -> Bialgebra {
    Bialgebra::new(
        Tensor3::from_entries(2, &[(1, 0, 0, -1), (1, 1, 0, -1), (1, 1, 1, -1)]),
        Tensor3::from_entries(2, &[(0, 0, 1, 1)]),
    )
    .unwrap()
}

fn center_symmetry(c: &mut Criterion) {
    let a = Algebra::new(sample_c()).unwrap();
    c.bench_function("center_symmetric dim 3", |b| b.iter(|| black_box(&a).is_center_symmetric()));
}

fn enumeration(c: &mut Criterion) {
    let spec = SearchSpec::new(2).center_symmetric();
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    g.bench_function("dim 2 center-symmetric", |b| b.iter(|| enumerate_structures(black_box(&spec)).unwrap()));
    g.finish();
}

fn equivalence(c: &mut Criterion) {
    let bg = verified();
    c.bench_function("equivalence_report dim 2", |b| b.iter(|| equivalence_report(black_box(&bg)).unwrap()));
}

fn cocycle(c: &mut Criterion) {
    let t = sample_c();
    let f = Tensor3::from_entries(3, &[(0, 1, 2, 1), (2, 0, 1, -1)]);
    let bracket = t.antisymmetrize();
    c.bench_function("cocycle constants", |b| b.iter(|| cocycle_check_constants(&t, &f, Side::Primal).unwrap()));
    c.bench_function("cocycle direct", |b| b.iter(|| cocycle_violation_direct(&bracket, &f).unwrap()));
}

criterion_group!(benches, center_symmetry, enumeration, equivalence, cocycle);
criterion_main!(benches);

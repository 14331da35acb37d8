use criterion::{black_box, criterion_group, criterion_main, Criterion};

use girdled::cohomology::codifferential_kernel;
use girdled::liealg::{build_basis, killing_matrix, BasisKind};
use girdled::structeq::{generate_structure_equations, verify_iz_change_of_frame, ConstraintTable};
use girdled::Fixtures;

fn kernels(c: &mut Criterion) {
    for d in 1..=3 {
        c.bench_function(&format!("codifferential_kernel/{d}"), |b| {
            b.iter(|| codifferential_kernel(black_box(d)).unwrap())
        });
    }
}

fn killing(c: &mut Criterion) {
    c.bench_function("killing_matrix/f", |b| {
        b.iter(|| killing_matrix(&build_basis(BasisKind::F)).unwrap())
    });
}

fn structure_equations(c: &mut Criterion) {
    let fixtures = Fixtures::embedded().unwrap();
    let table = ConstraintTable::from_fixture(&fixtures.constraints).unwrap();
    c.bench_function("generate_structure_equations", |b| {
        b.iter(|| generate_structure_equations(black_box(&table)).unwrap())
    });
    let eqs = generate_structure_equations(&table).unwrap();
    c.bench_function("iz_change_of_frame", |b| {
        b.iter(|| verify_iz_change_of_frame(black_box(&eqs)).unwrap())
    });
}

criterion_group!(benches, kernels, killing, structure_equations);
criterion_main!(benches);

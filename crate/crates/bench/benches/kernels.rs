//! Microbenchmarks for the three hot kernels: permute-and-add application
//! (bit-packed vs dense matrix), coset-leader table construction, and
//! spectral decomposition.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use permadd_core::algebra::{AlgebraElement, EdgeVector};
use permadd_core::gf::Field;
use permadd_core::group::Group;
use permadd_core::ideal::ideal_from_t;
use permadd_core::spectral::decompose;
use std::collections::BTreeSet;

fn bench_apply(c: &mut Criterion) {
    let g = Group::new(&[255]).unwrap();
    let f2 = Field::new(2, 1).unwrap();
    let n = 255usize;
    let coeffs: Vec<_> = (0..n)
        .map(|i| f2.element_from_index(u64::from(i % 3 == 0)))
        .collect();
    let a = AlgebraElement::new(&g, &f2, coeffs).unwrap();
    let vec: Vec<_> = (0..n)
        .map(|i| f2.element_from_index(u64::from(i % 5 == 0)))
        .collect();
    let v = EdgeVector::from_elements(&f2, &vec);
    c.bench_function("apply_bitpacked_c255", |b| b.iter(|| a.apply(&v).unwrap()));
    let m = a.matrix_rep();
    c.bench_function("apply_dense_matrix_c255", |b| b.iter(|| m.mul_vec(&vec)));
}

fn bench_covering_radius(c: &mut Criterion) {
    let d = decompose(&Group::new(&[15]).unwrap(), 2).unwrap();
    let t: BTreeSet<usize> = [2usize, 3].into_iter().collect();
    c.bench_function("covering_radius_15_7_bch", |b| {
        b.iter_batched(
            || ideal_from_t(&d, &t).unwrap(),
            |m| m.annihilator().linear_code().covering_radius().unwrap(),
            BatchSize::SmallInput,
        )
    });
}

fn bench_decompose(c: &mut Criterion) {
    let g = Group::new(&[15]).unwrap();
    c.bench_function("decompose_f2_c15", |b| b.iter(|| decompose(&g, 2).unwrap()));
}

criterion_group!(benches, bench_apply, bench_covering_radius, bench_decompose);
criterion_main!(benches);

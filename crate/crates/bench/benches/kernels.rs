use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use graphdiffuse_bench::{boundary_source, path_background, path_operator, quarter_support};
use graphdiffuse_core::born::{born_solve, greens_direct};
use graphdiffuse_core::cayley::{
    cayley_graph, green_nonabelian, young_orthogonal_irreps, FiniteGroup, GeneratorSet,
};
use graphdiffuse_core::closed_form::{lattice2d_green_quadrature, mobius_green};

fn bench_greens_direct(c: &mut Criterion) {
    let mut group = c.benchmark_group("greens_direct");
    for n in [100usize, 200] {
        let h = path_operator(n);
        group.bench_function(format!("path_{n}"), |b| {
            b.iter(|| greens_direct(black_box(&h)).unwrap())
        });
    }
    group.finish();
}

fn bench_born_solve(c: &mut Criterion) {
    let n = 200usize;
    let g0 = path_background(n);
    let eta = quarter_support(n);
    let f = boundary_source(n + 2);
    c.bench_function("born_solve_n200_terms20", |b| {
        b.iter(|| born_solve(black_box(&g0), black_box(&eta), 1.0, 20, black_box(&f)).unwrap())
    });
}

fn bench_closed_forms(c: &mut Criterion) {
    c.bench_function("mobius_green_n501", |b| {
        b.iter(|| mobius_green(black_box(501), 0.7, 13, 400).unwrap())
    });
    c.bench_function("lattice2d_quadrature_d3", |b| {
        b.iter(|| lattice2d_green_quadrature(black_box(0.5), 0, 0, 2, 1).unwrap())
    });
}

fn bench_representations(c: &mut Criterion) {
    c.bench_function("young_irreps_s5", |b| {
        let group = FiniteGroup::symmetric(5).unwrap();
        b.iter(|| young_orthogonal_irreps(black_box(&group)).unwrap())
    });
    c.bench_function("permutohedron_green_s4", |b| {
        let group = FiniteGroup::symmetric(4).unwrap();
        let s = GeneratorSet::adjacent_transpositions(&group).unwrap();
        let reps = young_orthogonal_irreps(&group).unwrap();
        let _graph = cayley_graph(&group, &s).unwrap();
        b.iter(|| green_nonabelian(black_box(&group), &s, &reps, 0.1).unwrap())
    });
}

criterion_group!(
    benches,
    bench_greens_direct,
    bench_born_solve,
    bench_closed_forms,
    bench_representations
);
criterion_main!(benches);

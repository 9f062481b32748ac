use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tvlab_core::{
    chessboard, homology, reduced_vanishes_up_to, Coefficients, SimplicialChains,
};

fn chessboard_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("chessboard-homology");
    group.sample_size(10);
    for &(m, n) in &[(3usize, 4usize), (4, 5), (5, 5)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{m}x{n}")),
            &(m, n),
            |b, &(m, n)| {
                let board = chessboard(m, n);
                b.iter(|| {
                    let chains = SimplicialChains::new(&board);
                    homology(&chains.complex, Coefficients::Integers).unwrap()
                });
            },
        );
    }
    group.finish();
}

fn connectivity_window(c: &mut Criterion) {
    let mut group = c.benchmark_group("bounded-vanishing");
    group.sample_size(10);
    for &(m, n, bound) in &[(5usize, 5usize, 1i64), (5, 6, 1), (6, 6, 2)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{m}x{n}@{bound}")),
            &(m, n, bound),
            |b, &(m, n, bound)| {
                let board = chessboard(m, n);
                b.iter(|| reduced_vanishes_up_to(&board, bound));
            },
        );
    }
    group.finish();
}

criterion_group!(benches, chessboard_homology, connectivity_window);
criterion_main!(benches);

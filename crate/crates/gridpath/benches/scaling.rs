//! Criterion benches: finder scaling in k, the cycle shrink engine, and the
//! oracle-equivalence sweep evaluated through the data-parallel layer
//! against its always-sequential twin.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gridpath::cycles::{cycle_exists, find_cycle, longest_cycle, shrink_cycle};
use gridpath::grid::{RectGrid, Vertex};
use gridpath::oracle::{self, OracleCfg};
use gridpath::parallel::{map_instances, map_instances_seq};
use gridpath::paths::find_path;
use std::hint::black_box;

fn bench_find_cycle(c: &mut Criterion) {
    let grid = RectGrid::new(4_000_000, 4_000_000);
    let mut group = c.benchmark_group("find_cycle");
    group.sample_size(10);
    for k in [10_000usize, 100_000, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| black_box(find_cycle(&grid, k).unwrap().len()));
        });
    }
    group.finish();
}

fn bench_find_path(c: &mut Criterion) {
    let grid = RectGrid::new(1_000_000, 1_000_000);
    let mut group = c.benchmark_group("find_path");
    group.sample_size(10);
    for k in [1_000usize, 3_000, 10_000] {
        let d = (k as i64 * 45) / 100;
        let s = Vertex::new(1000, 1000);
        let t = Vertex::new(1000 + d, 1000 + d);
        let l = gridpath::grid::shortest_len(s, t);
        let k_adj = if (k - l).is_multiple_of(2) { k } else { k + 1 };
        group.bench_with_input(BenchmarkId::from_parameter(k_adj), &k_adj, |b, &k| {
            b.iter(|| black_box(find_path(&grid, s, t, k).unwrap().len()));
        });
    }
    group.finish();
}

fn bench_shrink(c: &mut Criterion) {
    let grid = RectGrid::new(300, 300);
    let cycle = longest_cycle(&grid).unwrap();
    let e = cycle.first_edge();
    c.bench_function("shrink_cycle/90000_to_1000", |b| {
        b.iter(|| black_box(shrink_cycle(&cycle, e, cycle.len() - 1000).unwrap().len()));
    });
}

/// The equivalence sweep over all small grids, dispatched through the
/// parallel layer and its sequential twin.
fn bench_equivalence_sweep(c: &mut Criterion) {
    let instances: Vec<(i64, i64)> = (1..=6)
        .flat_map(|m| (1..=6).map(move |n| (m, n)))
        .collect();
    let work = |&(m, n): &(i64, i64)| -> usize {
        let grid = RectGrid::new(m, n);
        let verts: Vec<Vertex> = grid.vertices().collect();
        let cfg = OracleCfg::with_bound(36);
        (3..=(m * n + 1) as usize)
            .filter(|&k| {
                let truth = oracle::exists_cycle(&verts, k, cfg).unwrap();
                assert_eq!(truth, cycle_exists(&grid, k));
                truth
            })
            .count()
    };
    let mut group = c.benchmark_group("oracle_sweep");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(map_instances(instances.clone(), work)));
    });
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(map_instances_seq(instances.clone(), work)));
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_find_cycle,
    bench_find_path,
    bench_shrink,
    bench_equivalence_sweep
);
criterion_main!(benches);

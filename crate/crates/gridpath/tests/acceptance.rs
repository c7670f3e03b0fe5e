//! Acceptance suite: exhaustive oracle equivalence and validation for every
//! theorem-level guarantee, one test per criterion, each printing a PASS
//! line. Sweeps fan out over the instance lists via the parallel module.

use gridpath::caves::{contract_path, is_contractible, is_convex, next_cave_in_cycle};
use gridpath::cycles::{
    cycle_exists, find_cycle, longest_cycle, shrink_cycle, shrink_cycle_solid, staircase_with_cycle,
};
use gridpath::grid::{
    validate_cycle, validate_path, CycleSeq, GridLike, PathSeq, RectGrid, SolidGrid, Vertex,
};
use gridpath::grid3d::{
    cycle_exists_3d, find_cycle_3d, find_path_3d, map_f, map_f_inv, path_exists_3d,
    validate_cycle_3d, validate_path_3d, Grid3D, Vertex3,
};
use gridpath::oracle::{self, OracleCfg};
use gridpath::parallel::map_instances;
use gridpath::paths::{find_contractible_cave, find_path, longest_path, path_exists};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn v(x: i64, y: i64) -> Vertex {
    Vertex::new(x, y)
}

#[test]
fn criterion_1_cycle_existence_equivalence() {
    let dims: Vec<(i64, i64)> = (1..=6)
        .flat_map(|m| (1..=6).map(move |n| (m, n)))
        .collect();
    let failures: usize = map_instances(dims, |&(m, n)| {
        let grid = RectGrid::new(m, n);
        let verts: Vec<Vertex> = grid.vertices().collect();
        let cfg = OracleCfg::with_bound(36);
        let mut bad = 0usize;
        for k in 3..=(m * n + 1) as usize {
            let truth = oracle::exists_cycle(&verts, k, cfg).unwrap();
            let claim = cycle_exists(&grid, k);
            if truth != claim {
                eprintln!("mismatch R({m},{n}) k={k}: oracle {truth}, predicate {claim}");
                bad += 1;
                continue;
            }
            if truth {
                let c = find_cycle(&grid, k).unwrap();
                if c.len() != k || validate_cycle(c.vertices(), &grid).is_err() {
                    eprintln!("bad cycle R({m},{n}) k={k}");
                    bad += 1;
                }
            } else if find_cycle(&grid, k).is_ok() {
                eprintln!("found impossible cycle R({m},{n}) k={k}");
                bad += 1;
            }
        }
        bad
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 1 (cycle existence equals the oracle for all grids up to 6x6): PASS");
}

#[test]
fn criterion_2_path_existence_equivalence() {
    let mut dims: Vec<(i64, i64)> = Vec::new();
    for m in 1..=16i64 {
        for n in 1..=16i64 {
            if m * n <= 16 {
                dims.push((m, n));
            }
        }
    }
    let failures: usize = map_instances(dims, |&(m, n)| {
        let grid = RectGrid::new(m, n);
        let verts: Vec<Vertex> = grid.vertices().collect();
        let cfg = OracleCfg::with_bound(16);
        let mut bad = 0usize;
        for &s in &verts {
            for &t in &verts {
                if s == t {
                    continue;
                }
                for k in 1..=verts.len() {
                    let truth = oracle::exists_path(&verts, s, t, k, cfg).unwrap();
                    let claim = path_exists(&grid, s, t, k).unwrap();
                    if truth != claim {
                        eprintln!("mismatch R({m},{n}) {s}->{t} k={k}: oracle {truth}");
                        bad += 1;
                        continue;
                    }
                    if truth {
                        match find_path(&grid, s, t, k) {
                            Ok(p) => {
                                if p.len() != k
                                    || p.s() != s
                                    || p.t() != t
                                    || validate_path(p.vertices(), &grid).is_err()
                                {
                                    eprintln!("bad path R({m},{n}) {s}->{t} k={k}");
                                    bad += 1;
                                }
                            }
                            Err(e) => {
                                eprintln!("find_path failed R({m},{n}) {s}->{t} k={k}: {e}");
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);

    // 100 random probes on R(5,5)
    let mut rng = ChaCha8Rng::seed_from_u64(20260809);
    let grid = RectGrid::new(5, 5);
    let verts: Vec<Vertex> = grid.vertices().collect();
    let probes: Vec<(Vertex, Vertex, usize)> = (0..100)
        .map(|_| {
            let s = verts[rng.random_range(0..verts.len())];
            let mut t = verts[rng.random_range(0..verts.len())];
            while t == s {
                t = verts[rng.random_range(0..verts.len())];
            }
            (s, t, rng.random_range(1..=25usize))
        })
        .collect();
    let cfg = OracleCfg::with_bound(25);
    let failures: usize = map_instances(probes, |&(s, t, k)| {
        let truth = oracle::exists_path(&verts, s, t, k, cfg).unwrap();
        let claim = path_exists(&grid, s, t, k).unwrap();
        if truth != claim {
            eprintln!("probe mismatch {s}->{t} k={k}: oracle {truth}");
            return 1;
        }
        if truth {
            let p = find_path(&grid, s, t, k).unwrap();
            if p.len() != k || validate_path(p.vertices(), &grid).is_err() {
                eprintln!("probe bad path {s}->{t} k={k}");
                return 1;
            }
        }
        0
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 2 (path existence equals the oracle, all grids with up to 16 vertices plus 100 probes on 5x5): PASS");
}

#[test]
fn criterion_3_longest_cycle_lengths() {
    let dims: Vec<(i64, i64)> = (2..=6)
        .flat_map(|m| (2..=6).map(move |n| (m, n)))
        .collect();
    let failures: usize = map_instances(dims, |&(m, n)| {
        let grid = RectGrid::new(m, n);
        let verts: Vec<Vertex> = grid.vertices().collect();
        let want = if (m * n) % 2 == 0 { m * n } else { m * n - 1 } as usize;
        let got = longest_cycle(&grid).unwrap();
        let oracle_max = oracle::max_cycle_len(&verts, OracleCfg::with_bound(36)).unwrap();
        if got.len() != want || oracle_max != want || validate_cycle(got.vertices(), &grid).is_err()
        {
            eprintln!("R({m},{n}): built {}, oracle {oracle_max}, want {want}", got.len());
            1
        } else {
            0
        }
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 3 (longest-cycle lengths match the oracle maximum for 2..6 x 2..6): PASS");
}

#[test]
fn criterion_4_longest_path_contract() {
    // exact part
    let mut dims: Vec<(i64, i64)> = Vec::new();
    for m in 1..=16i64 {
        for n in 1..=16i64 {
            if m * n <= 16 {
                dims.push((m, n));
            }
        }
    }
    let failures: usize = map_instances(dims, |&(m, n)| {
        let grid = RectGrid::new(m, n);
        let verts: Vec<Vertex> = grid.vertices().collect();
        let cfg = OracleCfg::with_bound(16);
        let mut bad = 0usize;
        for &s in &verts {
            for &t in &verts {
                if s == t {
                    continue;
                }
                let got = longest_path(&grid, s, t).unwrap();
                let want = oracle::longest_path_len(&verts, s, t, cfg).unwrap();
                if got.len() != want || validate_path(got.vertices(), &grid).is_err() {
                    eprintln!("R({m},{n}) {s}->{t}: built {}, oracle {want}", got.len());
                    bad += 1;
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);

    // random larger grids: all-but-two coverage (both dimensions at least 3,
    // where the bound is attainable; see the thin-grid exactness tests)
    let mut rng = ChaCha8Rng::seed_from_u64(40);
    let draws: Vec<(i64, i64, Vertex, Vertex)> = (0..20)
        .map(|_| {
            let m = rng.random_range(3..=64i64);
            let n = rng.random_range(3..=64i64);
            let s = v(rng.random_range(1..=m), rng.random_range(1..=n));
            let mut t = v(rng.random_range(1..=m), rng.random_range(1..=n));
            while t == s {
                t = v(rng.random_range(1..=m), rng.random_range(1..=n));
            }
            (m, n, s, t)
        })
        .collect();
    let failures: usize = map_instances(draws, |&(m, n, s, t)| {
        let grid = RectGrid::new(m, n);
        let p = longest_path(&grid, s, t).unwrap();
        if (p.len() as i64) < m * n - 2 || validate_path(p.vertices(), &grid).is_err() {
            eprintln!("R({m},{n}) {s}->{t}: got {} < {}", p.len(), m * n - 2);
            1
        } else {
            0
        }
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 4 (longest path exact up to 16 vertices; covers all but two on 20 random grids up to 64x64): PASS");
}

#[test]
fn criterion_7_solid_grid_shrink() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let instances: Vec<(SolidGrid, CycleSeq)> = (0..50)
        .map(|i| staircase_with_cycle(&mut rng, 80 + (i % 5) * 80))
        .collect();
    let failures: usize = map_instances(instances, |(grid, ham)| {
        assert!(grid.is_solid());
        assert!(grid.len() <= 400);
        let mut bad = 0usize;
        for k in (4..=grid.len()).step_by(2) {
            match shrink_cycle_solid(grid, ham, k) {
                Ok(c) => {
                    if c.len() != k || validate_cycle(c.vertices(), grid).is_err() {
                        eprintln!("bad shrink to {k} on {} cells", grid.len());
                        bad += 1;
                    }
                }
                Err(e) => {
                    eprintln!("shrink to {k} failed on {} cells: {e}", grid.len());
                    bad += 1;
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 7 (every even length reachable from 50 staircase Hamiltonian cycles up to 400 vertices): PASS");
}

#[test]
fn criterion_8_three_d_equivalence() {
    // exhaustive mapping check
    for m in 1..=4i64 {
        for n in 1..=4i64 {
            for o in 1..=4i64 {
                let g = Grid3D::new(m, n, o);
                let grid2 = RectGrid::new(m, n * o);
                let mut seen = std::collections::HashSet::new();
                for p in g.vertices() {
                    let w = map_f(p, n);
                    assert!(grid2.contains_vertex(w));
                    assert!(seen.insert(w));
                    assert_eq!(map_f_inv(w, n), p);
                }
                for w in grid2.vertices() {
                    for u in [Vertex::new(w.x + 1, w.y), Vertex::new(w.x, w.y + 1)] {
                        if grid2.contains_vertex(u) {
                            assert_eq!(map_f_inv(w, n).manhattan(map_f_inv(u, n)), 1);
                        }
                    }
                }
            }
        }
    }

    let mut triples: Vec<(i64, i64, i64)> = Vec::new();
    for m in 1..=18i64 {
        for n in 1..=18i64 {
            for o in 1..=18i64 {
                if m * n * o <= 18 {
                    triples.push((m, n, o));
                }
            }
        }
    }
    let failures: usize = map_instances(triples, |&(m, n, o)| {
        let g = Grid3D::new(m, n, o);
        let verts: Vec<Vertex3> = g.vertices().collect();
        let cfg = OracleCfg::with_bound(18);
        let mut bad = 0usize;
        for k in 3..=verts.len() + 1 {
            let truth = oracle::exists_cycle_3d(&verts, k, cfg).unwrap();
            let claim = cycle_exists_3d(&g, k);
            if truth != claim {
                eprintln!("3D cycle mismatch {m}x{n}x{o} k={k}: oracle {truth}");
                bad += 1;
                continue;
            }
            if truth {
                let c = find_cycle_3d(&g, k).unwrap();
                if c.len() != k || validate_cycle_3d(&c, &g).is_err() {
                    eprintln!("bad 3D cycle {m}x{n}x{o} k={k}");
                    bad += 1;
                }
            }
        }
        for &s in &verts {
            for &t in &verts {
                if s == t {
                    continue;
                }
                for k in 1..=verts.len() {
                    let truth = oracle::exists_path_3d(&verts, s, t, k, cfg).unwrap();
                    let claim = path_exists_3d(&g, s, t, k).unwrap();
                    if truth != claim {
                        eprintln!("3D path mismatch {m}x{n}x{o} {s}->{t} k={k}: oracle {truth}");
                        bad += 1;
                        continue;
                    }
                    if truth {
                        match find_path_3d(&g, s, t, k) {
                            Ok(p) => {
                                if p.len() != k
                                    || p[0] != s
                                    || p[k - 1] != t
                                    || validate_path_3d(&p, &g).is_err()
                                {
                                    eprintln!("bad 3D path {m}x{n}x{o} {s}->{t} k={k}");
                                    bad += 1;
                                }
                            }
                            Err(e) => {
                                eprintln!("find_path_3d failed {m}x{n}x{o} {s}->{t} k={k}: {e}");
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
        bad
    })
    .into_iter()
    .sum();
    assert_eq!(failures, 0);
    println!("ACCEPTANCE 8 (3D finders agree with the oracle for all grids with up to 18 vertices; mapping exhaustive to 4x4x4): PASS");
}

#[test]
fn criterion_9_contraction_invariants() {
    let mut violations = 0usize;

    // paths: audit every contraction step while fully shrinking every
    // non-monotone simple path of R(3,3)
    let grid = RectGrid::new(3, 3);
    let mut stack: Vec<Vec<Vertex>> = grid.vertices().map(|s| vec![s]).collect();
    let mut audited = 0usize;
    while let Some(p) = stack.pop() {
        for d in [
            gridpath::grid::EdgeDir::Up,
            gridpath::grid::EdgeDir::Down,
            gridpath::grid::EdgeDir::Left,
            gridpath::grid::EdgeDir::Right,
        ] {
            let nxt = p.last().unwrap().step(d);
            if !grid.contains_vertex(nxt) || p.contains(&nxt) {
                continue;
            }
            let mut q = p.clone();
            q.push(nxt);
            stack.push(q.clone());
            let mut cur = PathSeq::try_new(q).unwrap();
            while !gridpath::grid::is_monotone(&cur) {
                let cave = find_contractible_cave(&cur, &grid).unwrap();
                let next = contract_path(&cur, &cave).unwrap();
                audited += 1;
                if next.len() != cur.len() - 2
                    || next.s() != cur.s()
                    || next.t() != cur.t()
                    || validate_path(next.vertices(), &grid).is_err()
                {
                    violations += 1;
                }
                cur = next;
            }
        }
    }
    assert!(audited > 300, "audited {audited} contractions");

    // cycles: every edge retained across every budget on assorted grids
    for (m, n) in [(2i64, 4i64), (3, 4), (4, 4), (5, 3), (5, 5), (6, 4)] {
        let g = RectGrid::new(m, n);
        let c = longest_cycle(&g).unwrap();
        for e_idx in 0..c.len() {
            let e = c.edge(e_idx);
            for i in (2..=c.len() - 4).step_by(2) {
                let shrunk = shrink_cycle(&c, e, i).unwrap();
                if shrunk.len() != c.len() - i
                    || !shrunk.contains_edge(e.0, e.1)
                    || validate_cycle(shrunk.vertices(), &g).is_err()
                {
                    violations += 1;
                }
            }
        }
    }

    // cycle contraction steps: contract the first contractible convex cave
    // repeatedly down to the 4-cycle
    for (m, n) in [(3i64, 3i64), (4, 4), (2, 8)] {
        let g = RectGrid::new(m, n);
        let mut cycle = longest_cycle(&g).unwrap();
        while cycle.len() > 4 {
            let mut from = 0;
            let mut found = None;
            while let Some(cave) = next_cave_in_cycle(&cycle, from) {
                if cave.p_index < from {
                    break;
                }
                if is_contractible(&cave, cycle.vertices()) && is_convex(&cave, &cycle) {
                    found = Some(cave);
                    break;
                }
                from = cave.p_index + 1;
            }
            let cave = found.expect("shrinkable cycle has a contractible convex cave");
            let next = gridpath::caves::contract_cycle(&cycle, &cave).unwrap();
            if next.len() != cycle.len() - 2 || validate_cycle(next.vertices(), &g).is_err() {
                violations += 1;
            }
            cycle = next;
        }
    }

    assert_eq!(violations, 0);
    println!("ACCEPTANCE 9 (every audited contraction: length -2, validity, marked edge and endpoints retained; zero violations): PASS");
}

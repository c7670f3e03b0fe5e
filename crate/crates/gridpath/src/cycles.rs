//! Fixed-length cycles in rectangular and Hamiltonian solid grid graphs:
//! longest-cycle patterns, the cycle shrinking procedure, the O(1) existence
//! predicate and the O(k) finder.

use crate::error::{Error, Reason, Result};
use crate::grid::{validate_cycle, CycleSeq, RectGrid, SolidGrid, Vertex};
use crate::ring::shrink_clockwise_cycle;
use rand::Rng;

/// An even shrink amount within `0..=|C|-4`, validated at construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShrinkBudget(usize);

impl ShrinkBudget {
    pub fn new(i: usize, cycle_len: usize) -> Result<Self> {
        if !i.is_multiple_of(2) || cycle_len < 4 || i > cycle_len - 4 {
            return Err(Error::BudgetInvalid(i));
        }
        Ok(ShrinkBudget(i))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// Row-serpentine Hamiltonian cycle of an m x n grid with even n, in local
/// coordinates with origin (1,1).
fn serpentine_rows(m: i64, n: i64) -> Vec<Vertex> {
    debug_assert!(m >= 2 && n >= 2 && n % 2 == 0);
    let mut vs = Vec::with_capacity((m * n) as usize);
    for x in 1..=m {
        vs.push(Vertex::new(x, 1));
    }
    for y in 2..=n {
        if y % 2 == 0 {
            for x in (2..=m).rev() {
                vs.push(Vertex::new(x, y));
            }
        } else {
            for x in 2..=m {
                vs.push(Vertex::new(x, y));
            }
        }
    }
    vs.push(Vertex::new(1, n));
    for y in (2..n).rev() {
        vs.push(Vertex::new(1, y));
    }
    vs
}

fn transpose(vs: Vec<Vertex>) -> Vec<Vertex> {
    vs.into_iter().map(|v| Vertex::new(v.y, v.x)).collect()
}

/// Longest cycle of `R(m,n)`: length m*n when the product is even, m*n - 1
/// otherwise. Errors with `NoCycle` when either dimension is 1.
pub fn longest_cycle(grid: &RectGrid) -> Result<CycleSeq> {
    let (m, n) = (grid.m, grid.n);
    if m < 2 || n < 2 {
        return Err(Error::NoCycle);
    }
    let local = if n % 2 == 0 {
        serpentine_rows(m, n)
    } else if m % 2 == 0 {
        transpose(serpentine_rows(n, m))
    } else {
        // Both odd: serpentine over the first n-1 rows, then absorb the top
        // row pairwise with bumps, skipping the white corner (m,n).
        let base = serpentine_rows(m, n - 1);
        let mut vs = Vec::with_capacity((m * n - 1) as usize);
        let top = n - 1;
        for i in 0..base.len() {
            let cur = base[i];
            vs.push(cur);
            let nxt = base[(i + 1) % base.len()];
            if cur.y == top && nxt.y == top && nxt.x == cur.x - 1 && nxt.x % 2 == 1 {
                vs.push(Vertex::new(cur.x, n));
                vs.push(Vertex::new(nxt.x, n));
            }
        }
        vs
    };
    let shifted = local
        .into_iter()
        .map(|v| Vertex::new(v.x + grid.ox - 1, v.y + grid.oy - 1))
        .collect();
    Ok(CycleSeq::canonical(shifted))
}

/// O(1) existence predicate: a cycle of length k exists in R(m,n) iff
/// m,n > 1, k is even and 4 <= k <= m*n.
pub fn cycle_exists(grid: &RectGrid, k: usize) -> bool {
    grid.m > 1 && grid.n > 1 && k.is_multiple_of(2) && k >= 4 && k as i64 <= grid.m * grid.n
}

fn violated_cycle_reason(grid: &RectGrid, k: usize) -> Reason {
    if grid.m < 2 || grid.n < 2 {
        Reason::Dimensions
    } else if !k.is_multiple_of(2) {
        Reason::Parity
    } else {
        Reason::Range
    }
}

/// Shrink cycle `C` by the even amount `i` while keeping edge `e`.
/// `C` must be a cycle of a solid grid graph so every convex cave can be
/// contracted in place.
pub fn shrink_cycle(cycle: &CycleSeq, e: (Vertex, Vertex), i: usize) -> Result<CycleSeq> {
    let budget = ShrinkBudget::new(i, cycle.len())?;
    let e_tail = cycle
        .edge_index(e.0, e.1)
        .ok_or(Error::EdgeNotInCycle(e.0, e.1))?;
    let out = shrink_clockwise_cycle(cycle.vertices(), e_tail, budget.get());
    debug_assert_eq!(out.len(), cycle.len() - i);
    Ok(CycleSeq::canonical(out))
}

fn isqrt_ceil(v: i64) -> i64 {
    let mut r = (v as f64).sqrt() as i64;
    while r * r < v {
        r += 1;
    }
    while r > 1 && (r - 1) * (r - 1) >= v {
        r -= 1;
    }
    r
}

/// Rectangular subgrid of `R` at its origin corner that still contains a
/// cycle of length k but has only O(k) vertices.
pub fn subgrid_for_k(grid: &RectGrid, k: usize) -> Result<RectGrid> {
    if !cycle_exists(grid, k) {
        return Err(Error::NoCycle);
    }
    let k = k as i64;
    let long = grid.m.max(grid.n);
    let short = grid.m.min(grid.n);
    let q = isqrt_ceil(k + 1);
    let (dm, dn) = if short >= q {
        (q, q)
    } else {
        let len = long.min((k + 1 + short - 1) / short);
        if grid.m >= grid.n {
            (len, short)
        } else {
            (short, len)
        }
    };
    let sub = RectGrid::with_origin(dm.min(grid.m), dn.min(grid.n), grid.ox, grid.oy);
    debug_assert!(cycle_exists(&sub, k as usize));
    Ok(sub)
}

/// Find a cycle of exactly k vertices inside `R`, deterministically, in time
/// proportional to k. Errors name the violated existence condition.
pub fn find_cycle(grid: &RectGrid, k: usize) -> Result<CycleSeq> {
    if !cycle_exists(grid, k) {
        return Err(Error::NoSuchCycle(violated_cycle_reason(grid, k)));
    }
    let sub = subgrid_for_k(grid, k)?;
    let longest = longest_cycle(&sub)?;
    let e = longest.first_edge();
    shrink_cycle(&longest, e, longest.len() - k)
}

/// Shrink a Hamiltonian cycle of a solid grid graph down to k vertices.
pub fn shrink_cycle_solid(g: &SolidGrid, ham: &CycleSeq, k: usize) -> Result<CycleSeq> {
    if !g.is_solid() {
        return Err(Error::NotSolid);
    }
    if ham.len() != g.len() || validate_cycle(ham.vertices(), g).is_err() {
        return Err(Error::NotHamiltonian);
    }
    if !k.is_multiple_of(2) {
        return Err(Error::NoSuchCycle(Reason::Parity));
    }
    if k < 4 || k > g.len() {
        return Err(Error::NoSuchCycle(Reason::Range));
    }
    let e = ham.first_edge();
    shrink_cycle(ham, e, ham.len() - k)
}

/// Random staircase-style solid grid together with a known Hamiltonian
/// cycle: columns come in pairs of equal even height, bottom-aligned, and the
/// cycle is the column-wise boustrophedon. Used to exercise
/// `shrink_cycle_solid` without a general Hamiltonian-cycle construction.
pub fn staircase_with_cycle<R: Rng + ?Sized>(rng: &mut R, max_cells: usize) -> (SolidGrid, CycleSeq) {
    let max_cells = max_cells.max(8);
    let mut heights: Vec<i64> = Vec::new();
    let mut cells = 0usize;
    loop {
        let h = 2 * rng.random_range(1..=6) as i64;
        if cells + 2 * h as usize > max_cells && !heights.is_empty() {
            break;
        }
        heights.push(h);
        heights.push(h);
        cells += 2 * h as usize;
        if cells + 4 > max_cells {
            break;
        }
        if heights.len() >= 4 && rng.random_range(0..8) == 0 {
            break;
        }
    }
    let w = heights.len() as i64;
    let mut cycle = Vec::with_capacity(cells);
    for pair in 0..w / 2 {
        let xo = 2 * pair + 1;
        let xe = xo + 1;
        let h = heights[(2 * pair) as usize];
        let y_start = if pair == 0 { 1 } else { 2 };
        for y in y_start..=h {
            cycle.push(Vertex::new(xo, y));
        }
        for y in (2..=h).rev() {
            cycle.push(Vertex::new(xe, y));
        }
    }
    cycle.push(Vertex::new(w, 1));
    for x in (2..w).rev() {
        cycle.push(Vertex::new(x, 1));
    }
    let verts = (0..w).flat_map(|i| {
        let h = heights[i as usize];
        (1..=h).map(move |y| Vertex::new(i + 1, y))
    });
    let grid = SolidGrid::from_vertices(verts);
    let cycle = CycleSeq::canonical(cycle);
    debug_assert_eq!(cycle.len(), grid.len());
    (grid, cycle)
}

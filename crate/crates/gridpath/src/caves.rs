//! Caves: the minimal sub-paths whose first and last edges point in opposite
//! directions. Contracting one shortens its carrier by exactly two vertices,
//! which is the single length-reduction primitive everything else builds on.
//!
//! A cave always has the shape `[one edge d, j >= 1 edges w, one edge -d]`
//! with `w` perpendicular to `d`. Its ends p and q therefore sit on a common
//! grid line at distance j; the straight p-q segment is the cave's mouth. The
//! `inside` vertices are the j-1 lattice points strictly between p and q.

use crate::error::{Error, Result};
use crate::grid::{signed_area_doubled, CycleSeq, EdgeDir, PathSeq, Vertex};
use std::collections::HashSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CarrierKind {
    Path,
    Cycle,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cave {
    pub kind: CarrierKind,
    /// Index of p in the carrier sequence.
    pub p_index: usize,
    /// Index of q; for cycles this may be numerically smaller than p_index
    /// (wrap-around) and is stored modulo the carrier length.
    pub q_index: usize,
    pub p: Vertex,
    pub q: Vertex,
    /// Direction of the cave's first edge.
    pub first_dir: EdgeDir,
    /// Direction of the perpendicular run (points from p toward q).
    pub run_dir: EdgeDir,
    /// Number of edges in the perpendicular run (= mouth edges).
    pub run_len: usize,
    /// Straight segment strictly between p and q.
    pub inside: Vec<Vertex>,
}

impl Cave {
    pub fn depth(&self) -> usize {
        self.inside.len()
    }

    /// Number of vertices of the cave's sub-path.
    pub fn subpath_len(&self) -> usize {
        self.run_len + 3
    }

    /// Directed edges of the cave's sub-path, in carrier order.
    pub fn subpath_edges<'a>(
        &'a self,
        carrier: &'a [Vertex],
    ) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
        let len = carrier.len();
        (0..self.subpath_len() - 1).map(move |i| {
            let a = carrier[(self.p_index + i) % len];
            let b = carrier[(self.p_index + i + 1) % len];
            (a, b)
        })
    }

    pub fn contains_edge(&self, carrier: &[Vertex], a: Vertex, b: Vertex) -> bool {
        self.subpath_edges(carrier)
            .any(|(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
    }

    /// Mouth edges as vertex pairs along the straight p-q segment.
    pub fn mouth_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let (dx, dy) = self.run_dir.delta();
        let p = self.p;
        (0..self.run_len).map(move |i| {
            let a = Vertex::new(p.x + dx * i as i64, p.y + dy * i as i64);
            let b = Vertex::new(p.x + dx * (i + 1) as i64, p.y + dy * (i + 1) as i64);
            (a, b)
        })
    }
}

/// Try to read a cave whose sub-path begins at `start` of the (possibly
/// cyclic) carrier. `limit` is the number of usable edges from `start`.
fn cave_at(vs: &[Vertex], start: usize, limit: usize, kind: CarrierKind) -> Option<Cave> {
    let len = vs.len();
    let at = |i: usize| vs[i % len];
    if limit < 3 {
        return None;
    }
    let d = EdgeDir::between(at(start), at(start + 1)).expect("carrier invariant");
    let w = EdgeDir::between(at(start + 1), at(start + 2)).expect("carrier invariant");
    if !d.is_perpendicular(w) {
        return None;
    }
    let mut j = 1;
    loop {
        if j + 1 >= limit {
            return None;
        }
        let next = EdgeDir::between(at(start + 1 + j), at(start + 2 + j)).expect("carrier");
        if next == w {
            j += 1;
            continue;
        }
        if next == d.opposite() {
            break;
        }
        return None;
    }
    Some(make_cave(vs, kind, start, d, w, j))
}

fn make_cave(vs: &[Vertex], kind: CarrierKind, start: usize, d: EdgeDir, w: EdgeDir, j: usize) -> Cave {
    let len = vs.len();
    let p = vs[start % len];
    let q = vs[(start + j + 2) % len];
    let (dx, dy) = w.delta();
    let inside = (1..j)
        .map(|i| Vertex::new(p.x + dx * i as i64, p.y + dy * i as i64))
        .collect();
    Cave {
        kind,
        p_index: start % len,
        q_index: (start + j + 2) % len,
        p,
        q,
        first_dir: d,
        run_dir: w,
        run_len: j,
        inside,
    }
}

/// Linear scan for the first cave whose sub-path begins at or after `from`.
fn scan_next_cave(vs: &[Vertex], from: usize, kind: CarrierKind) -> Option<Cave> {
    let len = vs.len();
    let edges = match kind {
        CarrierKind::Path => len.saturating_sub(1).saturating_sub(from),
        // a bit over one lap so caves that begin late in the lap still complete
        CarrierKind::Cycle => 2 * len,
    };
    let dir = |i: usize| EdgeDir::between(vs[i % len], vs[(i + 1) % len]).expect("carrier");
    let mut prev_dir: Option<EdgeDir> = None;
    let mut cur: Option<(EdgeDir, usize, usize)> = None; // dir, first edge index, count
    for step in 0..edges {
        let i = from + step;
        let d = dir(i);
        match cur {
            None => cur = Some((d, i, 1)),
            Some((cd, _, ref mut cnt)) if cd == d => *cnt += 1,
            Some((cd, first, cnt)) => {
                if let Some(pd) = prev_dir {
                    if d == pd.opposite() && cd.is_perpendicular(pd) {
                        return Some(make_cave(vs, kind, first - 1, pd, cd, cnt));
                    }
                }
                prev_dir = Some(cd);
                cur = Some((d, i, 1));
            }
        }
    }
    None
}

/// First cave of the path whose sub-path begins at or after `from`.
pub fn next_cave_in_path(path: &PathSeq, from: usize) -> Option<Cave> {
    scan_next_cave(path.vertices(), from, CarrierKind::Path)
}

/// First cave of the cycle whose sub-path begins at or after `from`
/// (indices taken modulo the cycle length, scanning one full turn).
pub fn next_cave_in_cycle(cycle: &CycleSeq, from: usize) -> Option<Cave> {
    scan_next_cave(cycle.vertices(), from, CarrierKind::Cycle)
}

/// True iff none of the cave's inside vertices occur in the carrier.
pub fn is_contractible(cave: &Cave, carrier: &[Vertex]) -> bool {
    if cave.inside.is_empty() {
        return true;
    }
    let set: HashSet<Vertex> = carrier.iter().copied().collect();
    cave.inside.iter().all(|v| !set.contains(v))
}

fn contracted_cycle_vertices(vs: &[Vertex], cave: &Cave) -> Vec<Vertex> {
    let len = vs.len();
    let mut out = Vec::with_capacity(len - 2);
    out.push(cave.p);
    out.extend(cave.inside.iter().copied());
    let mut i = cave.q_index;
    while i != cave.p_index {
        out.push(vs[i]);
        i = (i + 1) % len;
    }
    debug_assert_eq!(out.len(), len - 2);
    out
}

/// Contract a cave on a path: replace the cave sub-path by the straight
/// mouth segment. The result is two vertices shorter.
pub fn contract_path(path: &PathSeq, cave: &Cave) -> Result<PathSeq> {
    if !is_contractible(cave, path.vertices()) {
        return Err(Error::NotContractible);
    }
    let vs = path.vertices();
    let mut out = Vec::with_capacity(vs.len() - 2);
    out.extend_from_slice(&vs[..=cave.p_index]);
    out.extend(cave.inside.iter().copied());
    out.extend_from_slice(&vs[cave.q_index..]);
    debug_assert_eq!(out.len(), vs.len() - 2);
    PathSeq::try_new(out)
}

/// Contract a cave on a cycle; the result is re-canonicalized.
pub fn contract_cycle(cycle: &CycleSeq, cave: &Cave) -> Result<CycleSeq> {
    if !is_contractible(cave, cycle.vertices()) {
        return Err(Error::NotContractible);
    }
    let vs = cycle.vertices();
    if vs.len() - 2 < 4 {
        return Err(Error::NotContractible);
    }
    let out = contracted_cycle_vertices(vs, cave);
    CycleSeq::try_new(out)
}

/// Is the half-integer point strictly inside the cycle polygon? The query is
/// the midpoint of the unit segment (a,b); ray casting runs perpendicular to
/// the segment so no lattice degeneracy can occur.
fn midpoint_strictly_inside(cycle: &[Vertex], a: Vertex, b: Vertex) -> bool {
    let n = cycle.len();
    let mut crossings = 0usize;
    if a.y == b.y {
        // horizontal segment: vertical ray upward from (min(ax,bx)+1/2, ay)
        let cx = a.x.min(b.x);
        let cy = a.y;
        for i in 0..n {
            let u = cycle[i];
            let v = cycle[(i + 1) % n];
            if u.y == v.y && u.y > cy && u.x.min(v.x) == cx {
                crossings += 1;
            }
        }
    } else {
        // vertical segment: horizontal ray rightward from (ax, min(ay,by)+1/2)
        let cy = a.y.min(b.y);
        let cx = a.x;
        for i in 0..n {
            let u = cycle[i];
            let v = cycle[(i + 1) % n];
            if u.x == v.x && u.x > cx && u.y.min(v.y) == cy {
                crossings += 1;
            }
        }
    }
    crossings % 2 == 1
}

/// True iff every mouth vertex and edge of the cave lies in the closed
/// interior of the cycle's orthogonal polygon.
pub fn is_convex(cave: &Cave, cycle: &CycleSeq) -> bool {
    is_convex_raw(cave, cycle.vertices())
}

/// Same check against a raw cyclic vertex sequence (any orientation).
pub(crate) fn is_convex_raw(cave: &Cave, vs: &[Vertex]) -> bool {
    let n = vs.len();
    'mouth: for (a, b) in cave.mouth_edges() {
        for i in 0..n {
            let (u, v) = (vs[i], vs[(i + 1) % n]);
            if (u, v) == (a, b) || (u, v) == (b, a) {
                continue 'mouth; // on the boundary, hence in the closed interior
            }
        }
        if !midpoint_strictly_inside(vs, a, b) {
            return false;
        }
    }
    true
}

/// Is a lattice point not on the cycle strictly inside its polygon? The
/// point shares a region with the half-integer point just to its right, so
/// the degeneracy-free midpoint test applies.
pub(crate) fn lattice_point_strictly_inside(vs: &[Vertex], v: Vertex) -> bool {
    debug_assert!(!vs.contains(&v));
    midpoint_strictly_inside(vs, v, Vertex::new(v.x + 1, v.y))
}

/// Equivalent turn-sign test: in a clockwise cycle a cave is convex exactly
/// when its two inner turns are clockwise. Used on hot paths; the
/// definitional `is_convex` stays as the reference.
pub(crate) fn convex_by_turn(first_dir: EdgeDir, run_dir: EdgeDir, clockwise: bool) -> bool {
    let sign = first_dir.cross(run_dir);
    if clockwise {
        sign < 0
    } else {
        sign > 0
    }
}

/// First convex cave met scanning clockwise from `start` whose sub-path does
/// not contain the edge `avoid`; the cave may or may not be contractible.
/// Caves are ordered by where their sub-path completes, matching the cycle
/// shrink scan.
pub fn find_convex_cave(
    cycle: &CycleSeq,
    start: usize,
    avoid: (Vertex, Vertex),
) -> Option<Cave> {
    debug_assert!(signed_area_doubled(cycle.vertices()) < 0);
    let n = cycle.len();
    let mut best: Option<Cave> = None;
    for i in start..start + n {
        if let Some(cave) = cave_at(cycle.vertices(), i % n, n, CarrierKind::Cycle) {
            if !is_convex(&cave, cycle) {
                continue;
            }
            if cave.contains_edge(cycle.vertices(), avoid.0, avoid.1) {
                continue;
            }
            // completion index relative to the scan start
            let done = (cave.p_index + n - (start % n)) % n + cave.subpath_len();
            let better = match &best {
                None => true,
                Some(b) => {
                    let bdone = (b.p_index + n - (start % n)) % n + b.subpath_len();
                    done < bdone
                }
            };
            if better {
                best = Some(cave);
            }
        }
    }
    best
}

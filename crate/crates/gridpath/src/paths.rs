//! Fixed-length s-t paths in rectangular grids: contractible-cave search on
//! non-monotone paths (including blocking chains and the terminal-cycle
//! fallback), path shrinking, the longest-path operation, the existence
//! predicate and the finder.

use crate::caves::{
    self, contract_path, is_contractible, lattice_point_strictly_inside, next_cave_in_path,
    CarrierKind, Cave,
};
use crate::error::{Error, Reason, Result};
use crate::grid::{
    is_monotone, shortest_len, validate_path, EdgeDir, GridLike, PathSeq, RectGrid, Vertex,
};
use crate::longest;
use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

/// The caves visited while descending from the cave nearest to s; each one
/// blocks its predecessor and is strictly smaller, so the descent always
/// terminates.
#[derive(Debug, Clone)]
pub struct BlockingChain {
    pub caves: Vec<Cave>,
    pub terminal: ChainTerminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainTerminal {
    ContractibleCaveFound,
    BlockedByT,
}

/// A longest simple path between two distinct vertices. Exact on small
/// grids (exhaustive search) and on 1- or 2-wide grids (closed patterns);
/// on larger grids with both dimensions at least 3 it covers all but at
/// most two vertices.
pub fn longest_path(grid: &RectGrid, s: Vertex, t: Vertex) -> Result<PathSeq> {
    if s == t {
        return Err(Error::SameVertex);
    }
    for v in [s, t] {
        if !grid.contains_vertex(v) {
            return Err(Error::VertexOutOfGrid(v));
        }
    }
    Ok(PathSeq::from_valid(longest::longest_path_vertices(
        grid, s, t,
    )))
}

fn longest_memo() -> &'static Mutex<HashMap<(i64, i64, i64, i64, i64, i64), usize>> {
    static MEMO: OnceLock<Mutex<HashMap<(i64, i64, i64, i64, i64, i64), usize>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn longest_len(grid: &RectGrid, s: Vertex, t: Vertex) -> Result<usize> {
    let key = (
        grid.m,
        grid.n,
        s.x - grid.ox,
        s.y - grid.oy,
        t.x - grid.ox,
        t.y - grid.oy,
    );
    if let Some(&hit) = longest_memo().lock().unwrap().get(&key) {
        return Ok(hit);
    }
    let len = longest_path(grid, s, t)?.len();
    longest_memo().lock().unwrap().insert(key, len);
    Ok(len)
}

/// True iff a path of exactly k vertices joins s and t: l <= k <= L with
/// k = l (mod 2). L comes from the memoized longest-path construction; for
/// huge grids with both dimensions at least 3 the all-but-two coverage bound
/// answers k <= m*n - 2 without building anything.
pub fn path_exists(grid: &RectGrid, s: Vertex, t: Vertex, k: usize) -> Result<bool> {
    if s == t {
        return Err(Error::SameVertex);
    }
    for v in [s, t] {
        if !grid.contains_vertex(v) {
            return Err(Error::VertexOutOfGrid(v));
        }
    }
    let l = shortest_len(s, t);
    if k < l || !(k - l).is_multiple_of(2) {
        return Ok(false);
    }
    let cells = grid.m * grid.n;
    if k as i64 > cells {
        return Ok(false);
    }
    if cells > 10_000 && grid.m.min(grid.n) >= 3 && k as i64 <= cells - 2 {
        return Ok(true);
    }
    Ok(k <= longest_len(grid, s, t)?)
}

fn violated_path_reason(s: Vertex, t: Vertex, k: usize) -> Reason {
    if s == t {
        return Reason::SameVertex;
    }
    let l = shortest_len(s, t);
    if k >= l && !(k - l).is_multiple_of(2) {
        Reason::Parity
    } else {
        Reason::Range
    }
}

fn reverse_cave(cave: &Cave, len: usize) -> Cave {
    let mut inside = cave.inside.clone();
    inside.reverse();
    Cave {
        kind: cave.kind,
        p_index: len - 1 - cave.q_index,
        q_index: len - 1 - cave.p_index,
        p: cave.q,
        q: cave.p,
        first_dir: cave.first_dir,
        run_dir: cave.run_dir.opposite(),
        run_len: cave.run_len,
        inside,
    }
}

/// One contractible cave of a non-monotone path. Procedure: take the cave
/// nearest to s; if a mouth-end edge already lies on the path, contract the
/// three-edge corner there; otherwise descend into blocking caves; if the
/// descent dead-ends at t, close the cycle Q through the chord (t,v) and
/// return a contractible convex cave of Q avoiding the chord, reversing the
/// path first when s lies inside Q.
pub fn find_contractible_cave(path: &PathSeq, grid: &RectGrid) -> Result<Cave> {
    blocking_search(path, grid).map(|(cave, _)| cave)
}

/// Same search, also reporting the chain of blocking caves that was walked.
pub fn blocking_chain(path: &PathSeq, grid: &RectGrid) -> Result<(Cave, BlockingChain)> {
    blocking_search(path, grid)
}

fn blocking_search(path: &PathSeq, grid: &RectGrid) -> Result<(Cave, BlockingChain)> {
    if is_monotone(path) {
        return Err(Error::PathIsMonotone);
    }
    debug_assert!(validate_path(path.vertices(), grid).is_ok());
    match search_contractible(path) {
        SearchOutcome::Found(cave, chain) => Ok((cave, chain)),
        SearchOutcome::ReverseAndRetry => {
            let rev = path.reversed();
            match search_contractible(&rev) {
                SearchOutcome::Found(cave, mut chain) => {
                    for c in &mut chain.caves {
                        *c = reverse_cave(c, path.len());
                    }
                    Ok((reverse_cave(&cave, path.len()), chain))
                }
                SearchOutcome::ReverseAndRetry => unreachable!(
                    "reversal applies at most once: the new terminal cycle cannot enclose the other endpoint"
                ),
            }
        }
    }
}

enum SearchOutcome {
    Found(Cave, BlockingChain),
    ReverseAndRetry,
}

fn search_contractible(path: &PathSeq) -> SearchOutcome {
    let vs = path.vertices();
    let index_of: HashMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let t = path.t();
    let mut chain = Vec::new();

    let mut cave = next_cave_in_path(path, 0).expect("non-monotone path has a cave");
    loop {
        chain.push(cave.clone());
        if is_contractible(&cave, vs) {
            let chain = BlockingChain {
                caves: chain,
                terminal: ChainTerminal::ContractibleCaveFound,
            };
            return SearchOutcome::Found(cave, chain);
        }
        // Three-edge shortcut: a mouth-end edge already on the path makes
        // the corner next to it a depth-0 cave, contractible by definition.
        let m_first = cave.p.step(cave.run_dir);
        if cave.p_index > 0 && vs[cave.p_index - 1] == m_first {
            let corner = corner_cave_at(vs, cave.p_index - 1);
            let chain = BlockingChain {
                caves: chain,
                terminal: ChainTerminal::ContractibleCaveFound,
            };
            return SearchOutcome::Found(corner, chain);
        }
        let m_last = cave.q.step(cave.run_dir.opposite());
        if cave.q_index + 1 < vs.len() && vs[cave.q_index + 1] == m_last {
            let corner = corner_cave_at(vs, cave.q_index - 2);
            let chain = BlockingChain {
                caves: chain,
                terminal: ChainTerminal::ContractibleCaveFound,
            };
            return SearchOutcome::Found(corner, chain);
        }

        // Path vertices on the open mouth segment, in carrier order.
        let (wx, wy) = cave.run_dir.delta();
        let mut occupied: Vec<(usize, Vertex)> = (1..cave.run_len)
            .filter_map(|i| {
                let mv = Vertex::new(cave.p.x + wx * i as i64, cave.p.y + wy * i as i64);
                index_of.get(&mv).map(|&idx| (idx, mv))
            })
            .collect();
        occupied.sort_unstable();
        debug_assert!(!occupied.is_empty(), "non-contractible cave, empty mouth");

        if let Some(blocker) = extract_blocker(vs, &cave, &occupied) {
            debug_assert!(blocker.subpath_len() < cave.subpath_len());
            cave = blocker;
            continue;
        }

        if occupied.iter().any(|&(_, mv)| mv == t) {
            match terminal_cycle_cave(path, &cave, &index_of) {
                Some(found) => {
                    let chain = BlockingChain {
                        caves: chain,
                        terminal: ChainTerminal::BlockedByT,
                    };
                    return SearchOutcome::Found(found, chain);
                }
                None => return SearchOutcome::ReverseAndRetry,
            }
        }
        // Blocked by s alone cannot happen for the cave nearest to s; retry
        // reversed rather than give up if it ever does.
        return SearchOutcome::ReverseAndRetry;
    }
}

/// Depth-0 corner cave whose sub-path starts at `start`.
fn corner_cave_at(vs: &[Vertex], start: usize) -> Cave {
    let d = EdgeDir::between(vs[start], vs[start + 1]).unwrap();
    let w = EdgeDir::between(vs[start + 1], vs[start + 2]).unwrap();
    debug_assert_eq!(
        EdgeDir::between(vs[start + 2], vs[start + 3]).unwrap(),
        d.opposite()
    );
    make_path_cave(vs, start, d, w, 1)
}

fn make_path_cave(vs: &[Vertex], start: usize, d: EdgeDir, w: EdgeDir, j: usize) -> Cave {
    let (dx, dy) = w.delta();
    let p = vs[start];
    let inside = (1..j)
        .map(|i| Vertex::new(p.x + dx * i as i64, p.y + dy * i as i64))
        .collect();
    Cave {
        kind: CarrierKind::Path,
        p_index: start,
        q_index: start + j + 2,
        p,
        q: Vertex::new(p.x + dx * j as i64, p.y + dy * j as i64),
        first_dir: d,
        run_dir: w,
        run_len: j,
        inside,
    }
}

fn on_open_mouth(cave: &Cave, v: Vertex) -> bool {
    let (wx, wy) = cave.run_dir.delta();
    if wx == 0 {
        v.x == cave.p.x && (v.y - cave.p.y) * wy > 0 && (cave.q.y - v.y) * wy > 0
    } else {
        v.y == cave.p.y && (v.x - cave.p.x) * wx > 0 && (cave.q.x - v.x) * wx > 0
    }
}

/// Find a cave blocking `cave`: a maximal run of path vertices along the
/// open mouth, entered and left from the side away from the cave's strip.
/// Runs are scanned in carrier order.
fn extract_blocker(vs: &[Vertex], cave: &Cave, occupied: &[(usize, Vertex)]) -> Option<Cave> {
    let away = cave.first_dir.opposite();
    for &(idx, mv) in occupied {
        if idx == 0 || idx + 1 >= vs.len() {
            continue; // an endpoint sits here; not a blocking cave
        }
        if vs[idx - 1] != mv.step(away) {
            continue; // not the entry point of a run
        }
        let mut end = idx;
        while end + 1 < vs.len() && on_open_mouth(cave, vs[end + 1]) {
            end += 1;
        }
        if end == idx || end + 1 >= vs.len() {
            continue;
        }
        if vs[end + 1] != vs[end].step(away) {
            continue; // run does not exit back through the far side
        }
        let d = EdgeDir::between(vs[idx - 1], mv).unwrap();
        let w = EdgeDir::between(mv, vs[idx + 1]).unwrap();
        debug_assert_eq!(d, cave.first_dir);
        debug_assert!(d.is_perpendicular(w));
        return Some(make_path_cave(vs, idx - 1, d, w, end - idx));
    }
    None
}

/// The chain dead-ends at t: close the cycle Q = P[v..t] + (t,v) with v the
/// strip vertex across from t, and return a contractible convex cave of Q
/// avoiding the chord. `None` means s lies strictly inside Q, in which case
/// the caller reverses the path (the paper's role exchange of s and t).
fn terminal_cycle_cave(
    path: &PathSeq,
    cave: &Cave,
    index_of: &HashMap<Vertex, usize>,
) -> Option<Cave> {
    let vs = path.vertices();
    let t = path.t();
    let v = t.step(cave.first_dir);
    let vi = *index_of
        .get(&v)
        .expect("run vertex across the strip from t is on the path");
    let qvs = &vs[vi..];
    let n = qvs.len();
    debug_assert!(n >= 4 && n.is_multiple_of(2));
    if lattice_point_strictly_inside(qvs, path.s()) {
        return None;
    }
    let full: HashSet<Vertex> = vs.iter().copied().collect();
    let chord = (t, v);
    for start in 0..n {
        let dirq =
            |i: usize| EdgeDir::between(qvs[i % n], qvs[(i + 1) % n]).expect("Q cycle invariant");
        let d = dirq(start);
        let w = dirq(start + 1);
        if !d.is_perpendicular(w) {
            continue;
        }
        let mut j = 1;
        let mut closes = false;
        while j + 1 < n {
            let nd = dirq(start + 1 + j);
            if nd == w {
                j += 1;
                continue;
            }
            closes = nd == d.opposite();
            break;
        }
        if !closes {
            continue;
        }
        let candidate = make_cyclic_cave(qvs, start, d, w, j);
        if candidate
            .subpath_edges(qvs)
            .any(|(a, b)| (a, b) == chord || (b, a) == chord)
        {
            continue;
        }
        if !candidate.inside.iter().all(|mv| !full.contains(mv)) {
            continue;
        }
        if !caves::is_convex_raw(&candidate, qvs) {
            continue;
        }
        // translate Q indices back into path indices; the sub-path avoids
        // the chord, so it never wraps.
        let p_index = vi + candidate.p_index;
        let q_index = vi + candidate.q_index;
        debug_assert!(q_index > p_index && q_index < vs.len());
        return Some(Cave {
            kind: CarrierKind::Path,
            p_index,
            q_index,
            ..candidate
        });
    }
    panic!("terminal cycle without a contractible convex cave avoiding the chord");
}

fn make_cyclic_cave(qvs: &[Vertex], start: usize, d: EdgeDir, w: EdgeDir, j: usize) -> Cave {
    let n = qvs.len();
    let (dx, dy) = w.delta();
    let p = qvs[start % n];
    let inside = (1..j)
        .map(|i| Vertex::new(p.x + dx * i as i64, p.y + dy * i as i64))
        .collect();
    Cave {
        kind: CarrierKind::Path,
        p_index: start % n,
        q_index: (start + j + 2) % n,
        p,
        q: Vertex::new(p.x + dx * j as i64, p.y + dy * j as i64),
        first_dir: d,
        run_dir: w,
        run_len: j,
        inside,
    }
}

/// Shrink a path to exactly k vertices (same endpoints) by repeatedly
/// finding and contracting a contractible cave.
pub fn shrink_path(path: &PathSeq, grid: &RectGrid, k: usize) -> Result<PathSeq> {
    if k > path.len() {
        return Err(Error::NoSuchPath(Reason::Range));
    }
    if !(path.len() - k).is_multiple_of(2) {
        return Err(Error::ParityMismatch);
    }
    if k < shortest_len(path.s(), path.t()) {
        return Err(Error::BelowShortest);
    }
    let mut cur = path.clone();
    while cur.len() > k {
        let cave = find_contractible_cave(&cur, grid)?;
        let next = contract_path(&cur, &cave)?;
        debug_assert_eq!(next.len(), cur.len() - 2);
        debug_assert_eq!(next.s(), cur.s());
        debug_assert_eq!(next.t(), cur.t());
        cur = next;
    }
    Ok(cur)
}

fn grown_bbox(grid: &RectGrid, s: Vertex, t: Vertex, target: i64) -> RectGrid {
    let mut x0 = s.x.min(t.x);
    let mut x1 = s.x.max(t.x);
    let mut y0 = s.y.min(t.y);
    let mut y1 = s.y.max(t.y);
    loop {
        if (x1 - x0 + 1) * (y1 - y0 + 1) >= target {
            break;
        }
        let mut grew = false;
        if x1 < grid.x_max() {
            x1 += 1;
            grew = true;
        }
        if (x1 - x0 + 1) * (y1 - y0 + 1) < target && y1 < grid.y_max() {
            y1 += 1;
            grew = true;
        }
        if (x1 - x0 + 1) * (y1 - y0 + 1) < target && x0 > grid.ox {
            x0 -= 1;
            grew = true;
        }
        if (x1 - x0 + 1) * (y1 - y0 + 1) < target && y0 > grid.oy {
            y0 -= 1;
            grew = true;
        }
        if !grew {
            break;
        }
    }
    RectGrid::with_origin(x1 - x0 + 1, y1 - y0 + 1, x0, y0)
}

/// Square-ish block of at least `target` vertices containing s, pushed
/// toward t so that s sits in the corner facing away from t.
fn block_near(grid: &RectGrid, s: Vertex, t: Vertex, target: i64) -> RectGrid {
    let mut q = (target as f64).sqrt() as i64;
    while q * q < target {
        q += 1;
    }
    let mut qx = q.min(grid.m);
    let qy = ((target + qx - 1) / qx).min(grid.n);
    if qx * qy < target {
        qx = ((target + qy - 1) / qy).min(grid.m);
    }
    let x0 = if t.x >= s.x {
        s.x.min(grid.x_max() - qx + 1)
    } else {
        (s.x - qx + 1).max(grid.ox)
    };
    let y0 = if t.y >= s.y {
        s.y.min(grid.y_max() - qy + 1)
    } else {
        (s.y - qy + 1).max(grid.oy)
    };
    RectGrid::with_origin(qx, qy, x0, y0)
}

/// An s-t path of at least k vertices (and matching parity) of size O(k):
/// either the longest path of a grown bounding box around both endpoints,
/// or, when they are too far apart for that, the longest path of a block at
/// s joined to a monotone run to t that leaves the block immediately.
pub fn initial_path_for_k(grid: &RectGrid, s: Vertex, t: Vertex, k: usize) -> Result<PathSeq> {
    if s == t {
        return Err(Error::NoSuchPath(Reason::SameVertex));
    }
    if !path_exists(grid, s, t, k)? {
        return Err(Error::NoSuchPath(violated_path_reason(s, t, k)));
    }
    let k64 = k as i64;
    let bbox_cells = ((s.x - t.x).abs() + 1) * ((s.y - t.y).abs() + 1);
    if bbox_cells <= 2 * (k64 + 2) {
        let mut target = k64 + 3;
        loop {
            let sub = grown_bbox(grid, s, t, target);
            let p = longest_path(&sub, s, t)?;
            if p.len() >= k {
                debug_assert_eq!((p.len() - k) % 2, 0);
                return Ok(p);
            }
            assert!(
                (sub.m, sub.n) != (grid.m, grid.n),
                "existence granted but no long-enough path in the full grid"
            );
            target *= 2;
        }
    }
    let mut target = k64 + 3;
    loop {
        let block = block_near(grid, s, t, target);
        let mut v = Vertex::new(
            t.x.clamp(block.ox, block.x_max()),
            t.y.clamp(block.oy, block.y_max()),
        );
        if v == s {
            let cand = [
                Vertex::new(v.x + 1, v.y),
                Vertex::new(v.x - 1, v.y),
                Vertex::new(v.x, v.y + 1),
                Vertex::new(v.x, v.y - 1),
            ];
            v = *cand
                .iter()
                .find(|c| block.contains_vertex(**c))
                .expect("block has more than one vertex");
        }
        let candidate = if v == t {
            longest_path(&block, s, t)?
        } else {
            let head = longest_path(&block, s, v)?;
            let tail = monotone_tail(grid, &block, v, t);
            let mut joined = head.into_vertices();
            joined.extend(tail);
            PathSeq::try_new(joined)?
        };
        if candidate.len() >= k {
            debug_assert!(validate_path(candidate.vertices(), grid).is_ok());
            debug_assert_eq!((candidate.len() - k) % 2, 0);
            return Ok(candidate);
        }
        assert!(
            (block.m, block.n) != (grid.m, grid.n),
            "existence granted but no long-enough initial path"
        );
        target *= 2;
    }
}

/// Monotone run from v to t (exclusive of v) whose first step leaves the
/// block, keeping the two halves of the concatenation disjoint.
fn monotone_tail(grid: &RectGrid, block: &RectGrid, v: Vertex, t: Vertex) -> Vec<Vertex> {
    debug_assert!(grid.contains_vertex(t) && !block.contains_vertex(t));
    let x_first = t.x > block.x_max() || t.x < block.ox;
    let mut out = Vec::with_capacity(shortest_len(v, t));
    let mut cur = v;
    let dx = (t.x - v.x).signum();
    let dy = (t.y - v.y).signum();
    if x_first {
        while cur.x != t.x {
            cur = Vertex::new(cur.x + dx, cur.y);
            out.push(cur);
        }
        while cur.y != t.y {
            cur = Vertex::new(cur.x, cur.y + dy);
            out.push(cur);
        }
    } else {
        while cur.y != t.y {
            cur = Vertex::new(cur.x, cur.y + dy);
            out.push(cur);
        }
        while cur.x != t.x {
            cur = Vertex::new(cur.x + dx, cur.y);
            out.push(cur);
        }
    }
    debug_assert!(out.iter().all(|w| !block.contains_vertex(*w)));
    out
}

/// Find an s-t path of exactly k vertices: shrink an O(k)-sized initial path
/// down to k by cave contraction.
pub fn find_path(grid: &RectGrid, s: Vertex, t: Vertex, k: usize) -> Result<PathSeq> {
    if s == t {
        return Err(Error::NoSuchPath(Reason::SameVertex));
    }
    for v in [s, t] {
        if !grid.contains_vertex(v) {
            return Err(Error::VertexOutOfGrid(v));
        }
    }
    if !path_exists(grid, s, t, k)? {
        return Err(Error::NoSuchPath(violated_path_reason(s, t, k)));
    }
    let initial = initial_path_for_k(grid, s, t, k)?;
    shrink_path(&initial, grid, k)
}

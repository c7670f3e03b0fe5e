//! Independent ground truth: exhaustive backtracking enumeration of simple
//! paths and cycles in small grid graphs (2D and 3D), plus a definition-level
//! cave classifier. Everything here is written against the definitions and
//! deliberately shares no logic with the constructive modules it checks.

use crate::error::{Error, Result};
use crate::grid::Vertex;
use crate::grid3d::Vertex3;

pub const DEFAULT_BOUND: usize = 20;

#[derive(Clone, Copy, Debug)]
pub struct OracleCfg {
    /// Largest vertex set accepted.
    pub bound: usize,
    /// Enable parity and remaining-distance pruning. Results are identical
    /// either way; see the pruning equivalence test.
    pub prune: bool,
}

impl Default for OracleCfg {
    fn default() -> Self {
        OracleCfg {
            bound: DEFAULT_BOUND,
            prune: true,
        }
    }
}

impl OracleCfg {
    pub fn with_bound(bound: usize) -> Self {
        OracleCfg {
            bound,
            ..Default::default()
        }
    }
}

/// Adjacency-list graph over an explicit vertex list.
struct Graph {
    adj: Vec<Vec<usize>>,
    /// Two-coloring class of each vertex (sum of coordinates mod 2).
    parity: Vec<u8>,
    /// Pairwise hop lower bound: Manhattan distance in the ambient lattice.
    dist: Vec<Vec<u32>>,
}

fn build_graph<P: Copy, FA, FP, FD>(pts: &[P], adjacent: FA, parity: FP, dist: FD) -> Graph
where
    FA: Fn(P, P) -> bool,
    FP: Fn(P) -> u8,
    FD: Fn(P, P) -> u32,
{
    let n = pts.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && adjacent(pts[i], pts[j]) {
                adj[i].push(j);
            }
        }
    }
    let parity = pts.iter().map(|&p| parity(p)).collect();
    let dist = pts
        .iter()
        .map(|&a| pts.iter().map(|&b| dist(a, b)).collect())
        .collect();
    Graph { adj, parity, dist }
}

fn graph_2d(verts: &[Vertex]) -> Graph {
    build_graph(
        verts,
        |a: Vertex, b: Vertex| a.is_adjacent(b),
        |a: Vertex| ((a.x + a.y).rem_euclid(2)) as u8,
        |a: Vertex, b: Vertex| a.manhattan(b) as u32,
    )
}

fn graph_3d(verts: &[Vertex3]) -> Graph {
    build_graph(
        verts,
        |a: Vertex3, b: Vertex3| a.manhattan(b) == 1,
        |a: Vertex3| ((a.x + a.y + a.z).rem_euclid(2)) as u8,
        |a: Vertex3, b: Vertex3| a.manhattan(b) as u32,
    )
}

impl Graph {
    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Does a simple cycle with exactly k vertices exist? Each candidate
    /// cycle is rooted at its smallest vertex index (canonical-start pruning).
    fn exists_cycle(&self, k: usize, cfg: OracleCfg) -> bool {
        if k < 3 || k > self.len() {
            return false;
        }
        if cfg.prune && !k.is_multiple_of(2) {
            // bipartite: only even cycles
            return false;
        }
        let mut visited = vec![false; self.len()];
        for root in 0..self.len() {
            visited[root] = true;
            if self.cycle_dfs(root, root, 1, k, &mut visited, cfg) {
                return true;
            }
            visited[root] = false;
        }
        false
    }

    fn cycle_dfs(
        &self,
        root: usize,
        cur: usize,
        depth: usize,
        k: usize,
        visited: &mut [bool],
        cfg: OracleCfg,
    ) -> bool {
        if depth == k {
            return self.adj[cur].contains(&root);
        }
        for &nb in &self.adj[cur] {
            if nb <= root || visited[nb] {
                continue;
            }
            if cfg.prune && self.dist[nb][root] as usize > k - depth {
                continue;
            }
            visited[nb] = true;
            if self.cycle_dfs(root, nb, depth + 1, k, visited, cfg) {
                visited[nb] = false;
                return true;
            }
            visited[nb] = false;
        }
        false
    }

    /// Does a simple path of exactly k vertices from s to t exist?
    fn exists_path(&self, s: usize, t: usize, k: usize, cfg: OracleCfg) -> bool {
        if k < 1 || k > self.len() {
            return false;
        }
        if s == t {
            return k == 1;
        }
        if cfg.prune {
            let l = self.dist[s][t] as usize + 1;
            if k < l || (k as i64 - l as i64) % 2 != 0 {
                return false;
            }
        }
        let mut visited = vec![false; self.len()];
        visited[s] = true;
        self.path_dfs(s, t, 1, k, &mut visited, cfg)
    }

    fn path_dfs(
        &self,
        cur: usize,
        t: usize,
        depth: usize,
        k: usize,
        visited: &mut [bool],
        cfg: OracleCfg,
    ) -> bool {
        if depth == k {
            return cur == t;
        }
        for &nb in &self.adj[cur] {
            if visited[nb] || nb == t && depth + 1 != k {
                continue;
            }
            if cfg.prune {
                let remaining = k - depth - 1;
                let need = self.dist[nb][t] as usize;
                if need > remaining || !(remaining - need).is_multiple_of(2) {
                    continue;
                }
            }
            visited[nb] = true;
            if self.path_dfs(nb, t, depth + 1, k, visited, cfg) {
                visited[nb] = false;
                return true;
            }
            visited[nb] = false;
        }
        false
    }

    /// Length (vertex count) of a longest simple path from s to t.
    fn longest_path_len(&self, s: usize, t: usize) -> usize {
        if s == t {
            return 1;
        }
        let mut visited = vec![false; self.len()];
        visited[s] = true;
        let mut best = 0usize;
        self.longest_dfs(s, t, 1, &mut visited, &mut best);
        best
    }

    fn longest_dfs(
        &self,
        cur: usize,
        t: usize,
        depth: usize,
        visited: &mut [bool],
        best: &mut usize,
    ) {
        if cur == t {
            *best = (*best).max(depth);
            return;
        }
        for &nb in &self.adj[cur] {
            if visited[nb] {
                continue;
            }
            visited[nb] = true;
            self.longest_dfs(nb, t, depth + 1, visited, best);
            visited[nb] = false;
        }
        let _ = self.parity;
    }
}

fn index_of<P: PartialEq>(pts: &[P], p: &P) -> Option<usize> {
    pts.iter().position(|q| q == p)
}

fn check_bound(n: usize, cfg: OracleCfg) -> Result<()> {
    if n > cfg.bound {
        return Err(Error::BoundExceeded(cfg.bound));
    }
    Ok(())
}

pub fn exists_cycle(verts: &[Vertex], k: usize, cfg: OracleCfg) -> Result<bool> {
    check_bound(verts.len(), cfg)?;
    Ok(graph_2d(verts).exists_cycle(k, cfg))
}

pub fn exists_path(verts: &[Vertex], s: Vertex, t: Vertex, k: usize, cfg: OracleCfg) -> Result<bool> {
    check_bound(verts.len(), cfg)?;
    let g = graph_2d(verts);
    let (si, ti) = match (index_of(verts, &s), index_of(verts, &t)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(false),
    };
    Ok(g.exists_path(si, ti, k, cfg))
}

pub fn longest_path_len(verts: &[Vertex], s: Vertex, t: Vertex, cfg: OracleCfg) -> Result<usize> {
    check_bound(verts.len(), cfg)?;
    let g = graph_2d(verts);
    let (si, ti) = match (index_of(verts, &s), index_of(verts, &t)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(0),
    };
    Ok(g.longest_path_len(si, ti))
}

/// Largest k for which a cycle of k vertices exists, or 0 if acyclic.
pub fn max_cycle_len(verts: &[Vertex], cfg: OracleCfg) -> Result<usize> {
    check_bound(verts.len(), cfg)?;
    let g = graph_2d(verts);
    for k in (3..=verts.len()).rev() {
        if g.exists_cycle(k, cfg) {
            return Ok(k);
        }
    }
    Ok(0)
}

pub fn exists_cycle_3d(verts: &[Vertex3], k: usize, cfg: OracleCfg) -> Result<bool> {
    check_bound(verts.len(), cfg)?;
    Ok(graph_3d(verts).exists_cycle(k, cfg))
}

pub fn exists_path_3d(
    verts: &[Vertex3],
    s: Vertex3,
    t: Vertex3,
    k: usize,
    cfg: OracleCfg,
) -> Result<bool> {
    check_bound(verts.len(), cfg)?;
    let g = graph_3d(verts);
    let (si, ti) = match (index_of(verts, &s), index_of(verts, &t)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(false),
    };
    Ok(g.exists_path(si, ti, k, cfg))
}

pub fn longest_path_len_3d(
    verts: &[Vertex3],
    s: Vertex3,
    t: Vertex3,
    cfg: OracleCfg,
) -> Result<usize> {
    check_bound(verts.len(), cfg)?;
    let g = graph_3d(verts);
    let (si, ti) = match (index_of(verts, &s), index_of(verts, &t)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(0),
    };
    Ok(g.longest_path_len(si, ti))
}

/// A cave reported by the definitional scanner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaveReport {
    pub p: Vertex,
    pub q: Vertex,
    pub start_index: usize,
    pub inside: Vec<Vertex>,
    pub contractible: bool,
    /// Only meaningful on cycles.
    pub convex: Option<bool>,
}

/// Literal re-application of the definitions: scan every sub-path for the
/// minimal opposite-ends property, then test contractibility (no inside
/// vertex on the carrier) and, for cycles, convexity (inside lies within the
/// closed polygon, decided by half-integer ray casting).
pub fn enumerate_caves(verts: &[Vertex], cyclic: bool) -> Vec<CaveReport> {
    let n = verts.len();
    let at = |i: usize| verts[i % n];
    let dir_of = |i: usize| {
        let a = at(i);
        let b = at(i + 1);
        (b.x - a.x, b.y - a.y)
    };
    let edge_count = if cyclic { n } else { n.saturating_sub(1) };
    let mut out = Vec::new();
    for start in 0..if cyclic { n } else { edge_count } {
        // find the minimal sub-path starting exactly at `start` whose first
        // and last edges are opposite
        let d0 = if (cyclic && edge_count >= 3) || (!cyclic && start < edge_count) {
            dir_of(start)
        } else {
            continue;
        };
        let mut end = None;
        let limit = if cyclic { n - 1 } else { edge_count - start };
        for len in 2..=limit {
            let d = dir_of(start + len - 1);
            if d == (-d0.0, -d0.1) {
                end = Some(len);
                break;
            }
            if d == d0 {
                break; // a later opposite edge would not be minimal from here
            }
        }
        let Some(len) = end else { continue };
        // minimality: no proper suffix of the sub-path is itself a cave,
        // i.e. the interior edges must all be perpendicular to d0
        let interior_ok = (1..len - 1).all(|i| {
            let d = dir_of(start + i);
            d.0 * d0.0 + d.1 * d0.1 == 0
        });
        if !interior_ok {
            continue;
        }
        let p = at(start);
        let q = at(start + len);
        let sdx = (q.x - p.x).signum();
        let sdy = (q.y - p.y).signum();
        let steps = p.manhattan(q);
        let inside: Vec<Vertex> = (1..steps)
            .map(|i| Vertex::new(p.x + sdx * i, p.y + sdy * i))
            .collect();
        let carrier: std::collections::HashSet<Vertex> = verts.iter().copied().collect();
        let contractible = inside.iter().all(|v| !carrier.contains(v));
        let convex = if cyclic {
            Some(mouth_inside_closed_polygon(verts, p, q))
        } else {
            None
        };
        out.push(CaveReport {
            p,
            q,
            start_index: start,
            inside,
            contractible,
            convex,
        });
    }
    out
}

/// Every unit segment of the straight p-q mouth lies in the closed interior
/// of the polygon through `cycle`.
fn mouth_inside_closed_polygon(cycle: &[Vertex], p: Vertex, q: Vertex) -> bool {
    let n = cycle.len();
    let sdx = (q.x - p.x).signum();
    let sdy = (q.y - p.y).signum();
    let steps = p.manhattan(q);
    'seg: for i in 0..steps {
        let a = Vertex::new(p.x + sdx * i, p.y + sdy * i);
        let b = Vertex::new(p.x + sdx * (i + 1), p.y + sdy * (i + 1));
        // boundary edge?
        for j in 0..n {
            let u = cycle[j];
            let v = cycle[(j + 1) % n];
            if (u, v) == (a, b) || (u, v) == (b, a) {
                continue 'seg;
            }
        }
        // ray cast from the segment midpoint, perpendicular to the segment
        let mut crossings = 0usize;
        if a.y == b.y {
            let cx = a.x.min(b.x);
            for j in 0..n {
                let u = cycle[j];
                let v = cycle[(j + 1) % n];
                if u.y == v.y && u.y > a.y && u.x.min(v.x) == cx {
                    crossings += 1;
                }
            }
        } else {
            let cy = a.y.min(b.y);
            for j in 0..n {
                let u = cycle[j];
                let v = cycle[(j + 1) % n];
                if u.x == v.x && u.x > a.x && u.y.min(v.y) == cy {
                    crossings += 1;
                }
            }
        }
        if crossings.is_multiple_of(2) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RectGrid;

    fn rect_verts(m: i64, n: i64) -> Vec<Vertex> {
        RectGrid::new(m, n).vertices().collect()
    }

    fn v(x: i64, y: i64) -> Vertex {
        Vertex::new(x, y)
    }

    #[test]
    fn cycle_existence() {
        let cfg = OracleCfg::default();
        assert!(exists_cycle(&rect_verts(2, 2), 4, cfg).unwrap());
        assert!(!exists_cycle(&rect_verts(3, 3), 9, cfg).unwrap());
        assert!(exists_cycle(&rect_verts(2, 3), 6, cfg).unwrap());
        assert!(!exists_cycle(&rect_verts(1, 6), 4, cfg).unwrap());
        assert_eq!(max_cycle_len(&rect_verts(3, 3), cfg).unwrap(), 8);
    }

    #[test]
    fn path_existence_and_longest() {
        let cfg = OracleCfg::default();
        let g22 = rect_verts(2, 2);
        assert!(exists_path(&g22, v(1, 1), v(2, 2), 3, cfg).unwrap());
        assert!(!exists_path(&g22, v(1, 1), v(2, 2), 4, cfg).unwrap());
        assert_eq!(longest_path_len(&g22, v(1, 1), v(2, 2), cfg).unwrap(), 3);
        let g33 = rect_verts(3, 3);
        assert!(exists_path(&g33, v(1, 1), v(3, 3), 7, cfg).unwrap());
        assert_eq!(longest_path_len(&g33, v(1, 1), v(3, 3), cfg).unwrap(), 9);
        assert_eq!(longest_path_len(&g33, v(1, 1), v(2, 1), cfg).unwrap(), 8);
    }

    #[test]
    fn bound_is_enforced() {
        let cfg = OracleCfg::with_bound(8);
        assert_eq!(
            exists_cycle(&rect_verts(3, 3), 4, cfg),
            Err(Error::BoundExceeded(8))
        );
    }

    #[test]
    fn pruning_never_changes_results() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (2, 5), (3, 4), (2, 6), (1, 7)] {
            let verts = rect_verts(m, n);
            let on = OracleCfg {
                bound: 12,
                prune: true,
            };
            let off = OracleCfg {
                bound: 12,
                prune: false,
            };
            for k in 1..=verts.len() + 1 {
                assert_eq!(
                    exists_cycle(&verts, k, on).unwrap(),
                    exists_cycle(&verts, k, off).unwrap(),
                    "cycle {m}x{n} k={k}"
                );
            }
            for &s in &verts {
                for &t in &verts {
                    if s == t {
                        continue;
                    }
                    for k in 1..=verts.len() {
                        assert_eq!(
                            exists_path(&verts, s, t, k, on).unwrap(),
                            exists_path(&verts, s, t, k, off).unwrap(),
                            "path {m}x{n} {s}->{t} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn definitional_caves() {
        // mirrors the caves-module examples
        let path = [v(1, 2), v(1, 1), v(2, 1), v(3, 1), v(3, 2)];
        let caves = enumerate_caves(&path, false);
        assert_eq!(caves.len(), 1);
        assert_eq!((caves[0].p, caves[0].q), (v(1, 2), v(3, 2)));
        assert_eq!(caves[0].inside, vec![v(2, 2)]);
        assert!(caves[0].contractible);

        let blocked = [v(1, 2), v(1, 1), v(2, 1), v(3, 1), v(3, 2), v(2, 2)];
        let caves = enumerate_caves(&blocked, false);
        assert!(caves.iter().any(|c| !c.contractible));

        let c6 = [v(1, 1), v(1, 2), v(1, 3), v(2, 3), v(2, 2), v(2, 1)];
        let caves = enumerate_caves(&c6, true);
        assert!(caves.iter().all(|c| c.convex == Some(true)));
        assert_eq!(caves.iter().filter(|c| c.contractible).count(), 2);
    }
}

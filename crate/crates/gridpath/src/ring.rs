//! In-place cycle shrinking. This is the engine behind `cycles::shrink_cycle`
//! and `cycles::find_cycle`.
//!
//! The cycle is held as a doubly linked ring over an arena of nodes plus an
//! occupancy index from vertices to nodes. One clockwise scan looks for the
//! first convex cave that does not contain the protected edge e = (t,s):
//!
//! * contractible cave: contract it (length and budget drop by 2);
//! * non-contractible cave: let v be the occupied mouth vertex closest to p
//!   and u the run vertex across from it. If the arc from u to v is short
//!   enough, splice it out across the chord (v,u); otherwise recurse on the
//!   sub-cycle formed by that arc and the chord. Recursion is realised by
//!   parking the other arc on an explicit stack and continuing with the
//!   chord as the new protected edge, so stack depth is never an issue.
//!
//! The scan keeps running-direction state and, after a mutation, rewinds a
//! few runs so caves created at the splice site are re-detected. Every loop
//! pass strictly decreases either the budget or the cycle length.

use crate::grid::{EdgeDir, Vertex};
use std::collections::HashMap;

const NIL: u32 = u32::MAX;

enum Occupancy {
    Dense {
        ox: i64,
        oy: i64,
        w: i64,
        h: i64,
        cells: Vec<u32>,
    },
    Sparse(HashMap<Vertex, u32>),
}

impl Occupancy {
    fn build(verts: &[Vertex]) -> Occupancy {
        let min_x = verts.iter().map(|v| v.x).min().unwrap();
        let max_x = verts.iter().map(|v| v.x).max().unwrap();
        let min_y = verts.iter().map(|v| v.y).min().unwrap();
        let max_y = verts.iter().map(|v| v.y).max().unwrap();
        let w = max_x - min_x + 1;
        let h = max_y - min_y + 1;
        let area = (w as u128) * (h as u128);
        if area <= (verts.len() as u128) * 16 + 4096 {
            Occupancy::Dense {
                ox: min_x,
                oy: min_y,
                w,
                h,
                cells: vec![NIL; area as usize],
            }
        } else {
            Occupancy::Sparse(HashMap::with_capacity(verts.len() * 2))
        }
    }

    #[inline]
    fn get(&self, v: Vertex) -> Option<u32> {
        match self {
            Occupancy::Dense {
                ox,
                oy,
                w,
                h,
                cells,
            } => {
                let ix = v.x - ox;
                let iy = v.y - oy;
                if ix < 0 || iy < 0 || ix >= *w || iy >= *h {
                    return None;
                }
                let id = cells[(iy * w + ix) as usize];
                (id != NIL).then_some(id)
            }
            Occupancy::Sparse(map) => map.get(&v).copied(),
        }
    }

    #[inline]
    fn set(&mut self, v: Vertex, id: u32) {
        match self {
            Occupancy::Dense {
                ox, oy, w, cells, ..
            } => {
                let idx = ((v.y - *oy) * *w + (v.x - *ox)) as usize;
                cells[idx] = id;
            }
            Occupancy::Sparse(map) => {
                map.insert(v, id);
            }
        }
    }

    #[inline]
    fn clear(&mut self, v: Vertex) {
        match self {
            Occupancy::Dense {
                ox, oy, w, cells, ..
            } => {
                let idx = ((v.y - *oy) * *w + (v.x - *ox)) as usize;
                cells[idx] = NIL;
            }
            Occupancy::Sparse(map) => {
                map.remove(&v);
            }
        }
    }
}

struct Parked {
    chord_u: u32,
    chord_v: u32,
    chain_first: u32,
    chain_last: u32,
    chain_len: usize,
}

struct Ring {
    verts: Vec<Vertex>,
    nxt: Vec<u32>,
    prv: Vec<u32>,
    stamp: Vec<u32>,
    free: Vec<u32>,
    occ: Occupancy,
    len: usize,
}

impl Ring {
    fn build(vertices: &[Vertex]) -> Ring {
        let n = vertices.len();
        let mut occ = Occupancy::build(vertices);
        let mut nxt = vec![0u32; n];
        let mut prv = vec![0u32; n];
        for i in 0..n {
            nxt[i] = ((i + 1) % n) as u32;
            prv[i] = ((i + n - 1) % n) as u32;
            occ.set(vertices[i], i as u32);
        }
        Ring {
            verts: vertices.to_vec(),
            nxt,
            prv,
            stamp: vec![0; n],
            free: Vec::new(),
            occ,
            len: n,
        }
    }

    #[inline]
    fn vertex(&self, id: u32) -> Vertex {
        self.verts[id as usize]
    }

    #[inline]
    fn dir(&self, from: u32, to: u32) -> EdgeDir {
        EdgeDir::between(self.vertex(from), self.vertex(to)).expect("ring invariant: unit steps")
    }

    fn alloc(&mut self, v: Vertex) -> u32 {
        let id = if let Some(id) = self.free.pop() {
            self.verts[id as usize] = v;
            self.stamp[id as usize] = 0;
            id
        } else {
            self.verts.push(v);
            self.nxt.push(NIL);
            self.prv.push(NIL);
            self.stamp.push(0);
            (self.verts.len() - 1) as u32
        };
        self.occ.set(v, id);
        id
    }

    fn remove(&mut self, id: u32) {
        self.occ.clear(self.vertex(id));
        self.free.push(id);
    }

    /// Walk back over up to `boundaries` run boundaries (direction changes),
    /// never moving past `stop`.
    fn rewind(&self, from: u32, stop: u32, boundaries: usize) -> u32 {
        let mut node = from;
        let mut crossed = 0usize;
        let mut last_dir: Option<EdgeDir> = None;
        let mut steps = 0usize;
        while node != stop && steps < self.len {
            let p = self.prv[node as usize];
            let d = self.dir(p, node);
            if let Some(ld) = last_dir {
                if d != ld {
                    crossed += 1;
                    if crossed >= boundaries {
                        break;
                    }
                }
            }
            last_dir = Some(d);
            node = p;
            steps += 1;
        }
        node
    }
}

/// Shrink a clockwise cycle by `budget` vertices without removing the edge
/// that starts at index `e_tail` of the input order. `budget` must be even
/// and at most `len - 4`; the cycle must lie in a solid grid so every convex
/// cave's mouth is available. Returns the shrunk cycle, clockwise, starting
/// at the protected edge's tail.
pub(crate) fn shrink_clockwise_cycle(
    vertices: &[Vertex],
    e_tail: usize,
    mut budget: usize,
) -> Vec<Vertex> {
    let n = vertices.len();
    assert!(n >= 4);
    assert!(budget.is_multiple_of(2) && budget <= n - 4);
    let orig_t = e_tail as u32;
    let orig_s = ((e_tail + 1) % n) as u32;
    if budget == 0 {
        return vertices.to_vec();
    }

    let mut ring = Ring::build(vertices);
    let mut parked: Vec<Parked> = Vec::new();
    let mut t_id = orig_t;
    let mut s_id = orig_s;
    let mut epoch: u32 = 1;

    // scan state
    let mut pos = s_id;
    ring.stamp[pos as usize] = epoch;
    let mut cur_run: Option<(EdgeDir, u32, usize)> = None; // (dir, tail of first edge, edge count)
    let mut prev_dir: Option<EdgeDir> = None;

    macro_rules! restart_at {
        ($node:expr) => {{
            pos = $node;
            ring.stamp[pos as usize] = epoch;
            cur_run = None;
            prev_dir = None;
        }};
    }

    while budget > 0 {
        let nx = ring.nxt[pos as usize];
        if pos == t_id && nx == s_id {
            unreachable!("scanned the full cycle without finding a usable convex cave");
        }
        let d = ring.dir(pos, nx);
        let turn = match cur_run {
            None => {
                cur_run = Some((d, pos, 1));
                false
            }
            Some((cd, _, ref mut cnt)) if cd == d => {
                *cnt += 1;
                false
            }
            Some(_) => true,
        };
        if turn {
            let (run_dir, run_first, run_edges) = cur_run.unwrap();
            if let Some(pd) = prev_dir {
                if d == pd.opposite() {
                    // Cave completing on edge (pos -> nx): first edge
                    // (prv[run_first] -> run_first) of direction pd, run of
                    // run_edges edges of direction run_dir, last edge -pd.
                    let p_node = ring.prv[run_first as usize];
                    let q_node = nx;
                    // Convex for a clockwise cycle = both inner turns clockwise.
                    if crate::caves::convex_by_turn(pd, run_dir, true) {
                        let p = ring.vertex(p_node);
                        let (wx, wy) = run_dir.delta();
                        let j = run_edges;
                        let mut hit: Option<(u32, usize)> = None;
                        for i in 1..j {
                            let mv = Vertex::new(p.x + wx * i as i64, p.y + wy * i as i64);
                            if let Some(id) = ring.occ.get(mv) {
                                hit = Some((id, i));
                                break;
                            }
                        }
                        match hit {
                            None => {
                                // Contractible: splice the run out, walk the mouth.
                                let mut node = run_first;
                                for _ in 0..=j {
                                    let next = ring.nxt[node as usize];
                                    ring.remove(node);
                                    node = next;
                                }
                                debug_assert_eq!(node, q_node);
                                let mut tail = p_node;
                                for i in 1..j {
                                    let mv =
                                        Vertex::new(p.x + wx * i as i64, p.y + wy * i as i64);
                                    let id = ring.alloc(mv);
                                    ring.stamp[id as usize] = epoch;
                                    ring.nxt[tail as usize] = id;
                                    ring.prv[id as usize] = tail;
                                    tail = id;
                                }
                                ring.nxt[tail as usize] = q_node;
                                ring.prv[q_node as usize] = tail;
                                ring.len -= 2;
                                budget -= 2;
                                let back = ring.rewind(p_node, s_id, 4);
                                restart_at!(back);
                                continue;
                            }
                            Some((v_id, _)) if ring.stamp[v_id as usize] == epoch => {
                                // The occupied mouth vertex was already
                                // scanned; splicing here could drop the
                                // protected edge. Skip this cave.
                            }
                            Some((v_id, _)) => {
                                let v_vert = ring.vertex(v_id);
                                let u_vert = v_vert.step(pd);
                                let u_id = ring
                                    .occ
                                    .get(u_vert)
                                    .expect("mouth vertex across the strip is on the run");
                                debug_assert!(
                                    ring.nxt[v_id as usize] != u_id
                                        && ring.nxt[u_id as usize] != v_id,
                                    "chord endpoints are never cycle-adjacent"
                                );
                                // |C_{u,v}|: bidirectional walk to measure the
                                // cheaper side first.
                                let mut a = ring.nxt[u_id as usize];
                                let mut b = ring.nxt[v_id as usize];
                                let mut steps = 1usize;
                                let arc_u_v: usize;
                                loop {
                                    if a == v_id {
                                        arc_u_v = steps + 1;
                                        break;
                                    }
                                    if b == u_id {
                                        arc_u_v = ring.len - steps - 1 + 2;
                                        break;
                                    }
                                    a = ring.nxt[a as usize];
                                    b = ring.nxt[b as usize];
                                    steps += 1;
                                }
                                debug_assert!(arc_u_v >= 4 && arc_u_v.is_multiple_of(2));
                                if arc_u_v - 2 <= budget {
                                    // Splice the whole arc out across the chord.
                                    let mut node = ring.nxt[u_id as usize];
                                    while node != v_id {
                                        let next = ring.nxt[node as usize];
                                        ring.remove(node);
                                        node = next;
                                    }
                                    ring.nxt[u_id as usize] = v_id;
                                    ring.prv[v_id as usize] = u_id;
                                    ring.len -= arc_u_v - 2;
                                    budget -= arc_u_v - 2;
                                    let back = ring.rewind(u_id, s_id, 4);
                                    restart_at!(back);
                                    continue;
                                } else {
                                    // Recurse on the sub-cycle arc + chord by
                                    // parking the other side.
                                    let chain_first = ring.nxt[v_id as usize];
                                    let chain_last = ring.prv[u_id as usize];
                                    let chain_len = ring.len - arc_u_v;
                                    parked.push(Parked {
                                        chord_u: u_id,
                                        chord_v: v_id,
                                        chain_first,
                                        chain_last,
                                        chain_len,
                                    });
                                    ring.nxt[v_id as usize] = u_id;
                                    ring.prv[u_id as usize] = v_id;
                                    ring.len = arc_u_v;
                                    t_id = v_id;
                                    s_id = u_id;
                                    epoch += 1;
                                    restart_at!(u_id);
                                    continue;
                                }
                            }
                        }
                    }
                }
            }
            prev_dir = Some(run_dir);
            cur_run = Some((d, pos, 1));
        }
        pos = nx;
        ring.stamp[pos as usize] = epoch;
    }

    // Unwind parked arcs, innermost first.
    while let Some(p) = parked.pop() {
        debug_assert_eq!(ring.nxt[p.chord_v as usize], p.chord_u, "chord survived");
        ring.nxt[p.chord_v as usize] = p.chain_first;
        ring.prv[p.chain_first as usize] = p.chord_v;
        ring.nxt[p.chain_last as usize] = p.chord_u;
        ring.prv[p.chord_u as usize] = p.chain_last;
        ring.len += p.chain_len;
    }

    let mut out = Vec::with_capacity(ring.len);
    let mut node = orig_t;
    for _ in 0..ring.len {
        out.push(ring.vertex(node));
        node = ring.nxt[node as usize];
    }
    debug_assert_eq!(node, orig_t, "ring closes after len steps");
    out
}

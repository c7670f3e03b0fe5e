//! Construction of long simple paths between two given vertices of a
//! rectangular grid. Small instances are solved exactly by pruned exhaustive
//! search; larger ones by strip peeling with snake absorption, falling back
//! to corner sweeps and a width split when both endpoints hug opposite
//! borders. On grids with both dimensions at least 3 the result covers all
//! but at most two vertices; 1-wide and 2-wide grids use exact thin-grid
//! routines (where separator effects genuinely cap the length).

use crate::grid::{RectGrid, Vertex};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Largest instance handled by exhaustive search.
pub(crate) const EXHAUSTIVE_MAX: i64 = 25;

pub(crate) fn longest_path_vertices(grid: &RectGrid, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let ls = Vertex::new(s.x - grid.ox + 1, s.y - grid.oy + 1);
    let lt = Vertex::new(t.x - grid.ox + 1, t.y - grid.oy + 1);
    let local = build(grid.m, grid.n, ls, lt);
    debug_assert_eq!(local.first(), Some(&ls));
    debug_assert_eq!(local.last(), Some(&lt));
    local
        .into_iter()
        .map(|v| Vertex::new(v.x + grid.ox - 1, v.y + grid.oy - 1))
        .collect()
}

fn transpose_pt(v: Vertex) -> Vertex {
    Vertex::new(v.y, v.x)
}

fn flip_x_pt(v: Vertex, m: i64) -> Vertex {
    Vertex::new(m + 1 - v.x, v.y)
}

fn flip_y_pt(v: Vertex, n: i64) -> Vertex {
    Vertex::new(v.x, n + 1 - v.y)
}

fn build(m: i64, n: i64, s: Vertex, t: Vertex) -> Vec<Vertex> {
    debug_assert!(s != t);
    debug_assert!((1..=m).contains(&s.x) && (1..=n).contains(&s.y));
    debug_assert!((1..=m).contains(&t.x) && (1..=n).contains(&t.y));
    if m == 1 || n == 1 {
        return line_path(s, t);
    }
    if m * n <= EXHAUSTIVE_MAX {
        return brute_force(m, n, s, t);
    }
    if m == 2 {
        return thin2(n, s, t);
    }
    if n == 2 {
        let p = thin2(m, transpose_pt(s), transpose_pt(t));
        return p.into_iter().map(transpose_pt).collect();
    }
    if m < n {
        let p = build(n, m, transpose_pt(s), transpose_pt(t));
        return p.into_iter().map(transpose_pt).collect();
    }
    // m >= n >= 3 and m*n > 25, hence m >= 6.
    if s.x <= m - 3 && t.x <= m - 3 {
        let mut p = build(m - 2, n, s, t);
        absorb_right_cols(&mut p, m, n);
        return p;
    }
    if s.x >= 4 && t.x >= 4 {
        let p = build(m, n, flip_x_pt(s, m), flip_x_pt(t, m));
        return p.into_iter().map(|v| flip_x_pt(v, m)).collect();
    }
    if n >= 5 && s.y <= n - 3 && t.y <= n - 3 {
        let mut p = build(m, n - 2, s, t);
        absorb_top_rows(&mut p, m, n);
        return p;
    }
    if n >= 5 && s.y >= 4 && t.y >= 4 {
        let p = build(m, n, flip_y_pt(s, n), flip_y_pt(t, n));
        return p.into_iter().map(|v| flip_y_pt(v, n)).collect();
    }
    // Both endpoints hug opposite vertical borders (and, when n >= 7, also
    // opposite horizontal borders). Normalize s to the left.
    if s.x > t.x {
        let mut p = build(m, n, t, s);
        p.reverse();
        return p;
    }
    debug_assert!(s.x <= 3 && t.x >= m - 2);
    if n <= 6 {
        cornered_thin(m, n, s, t)
    } else {
        // diagonal: normalize s to the bottom
        if s.y > t.y {
            let p = build(m, n, flip_y_pt(s, n), flip_y_pt(t, n));
            return p.into_iter().map(|v| flip_y_pt(v, n)).collect();
        }
        diag_split(m, n, s, t)
    }
}

fn line_path(s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mut out = vec![s];
    let mut cur = s;
    let dx = (t.x - s.x).signum();
    let dy = (t.y - s.y).signum();
    while cur != t {
        cur = Vertex::new(cur.x + dx, cur.y + dy);
        out.push(cur);
    }
    out
}

// ---------------------------------------------------------------------------
// exhaustive search (<= 25 cells), memoized

type BruteKey = (i64, i64, i64, i64, i64, i64);

fn brute_memo() -> &'static Mutex<HashMap<BruteKey, Vec<Vertex>>> {
    static MEMO: OnceLock<Mutex<HashMap<BruteKey, Vec<Vertex>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn brute_force(m: i64, n: i64, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let key = (m, n, s.x, s.y, t.x, t.y);
    if let Some(hit) = brute_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let cells = (m * n) as usize;
    debug_assert!(cells <= 32);
    let idx = |v: Vertex| ((v.y - 1) * m + (v.x - 1)) as usize;
    let mut nbr = vec![0u32; cells];
    for y in 1..=n {
        for x in 1..=m {
            let i = idx(Vertex::new(x, y));
            let mut mask = 0u32;
            if x > 1 {
                mask |= 1 << (i - 1);
            }
            if x < m {
                mask |= 1 << (i + 1);
            }
            if y > 1 {
                mask |= 1 << (i - m as usize);
            }
            if y < n {
                mask |= 1 << (i + m as usize);
            }
            nbr[i] = mask;
        }
    }
    let si = idx(s);
    let ti = idx(t);
    let mut best: Vec<usize> = Vec::new();
    let mut stack: Vec<usize> = vec![si];
    brute_dfs(&nbr, si, ti, 1 << si, &mut stack, &mut best);
    let out: Vec<Vertex> = best
        .iter()
        .map(|&i| Vertex::new((i as i64 % m) + 1, (i as i64 / m) + 1))
        .collect();
    brute_memo().lock().unwrap().insert(key, out.clone());
    out
}

fn reachable(nbr: &[u32], from: usize, free: u32) -> u32 {
    let mut wave = 1u32 << from;
    loop {
        let mut next = wave;
        let mut bits = wave;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= nbr[i] & free;
        }
        if next == wave {
            return wave;
        }
        wave = next;
    }
}

fn brute_dfs(nbr: &[u32], cur: usize, t: usize, used: u32, stack: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur == t {
        if stack.len() > best.len() {
            *best = stack.clone();
        }
        return;
    }
    let free = !used;
    let reach = reachable(nbr, cur, free | (1 << cur));
    if reach & (1 << t) == 0 {
        return;
    }
    let ub = stack.len() + (reach & free).count_ones() as usize;
    if ub <= best.len() {
        return;
    }
    let mut cand = nbr[cur] & free;
    while cand != 0 {
        let nb = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        stack.push(nb);
        brute_dfs(nbr, nb, t, used | (1 << nb), stack, best);
        stack.pop();
    }
}

// ---------------------------------------------------------------------------
// exact 2-wide grids

/// Longest path in the 2 x n grid (x in {1,2}), exact. Built from a small
/// family of zigzag candidates with optional dips into the regions below s
/// and above t; checked against exhaustive search for every n <= 12 in tests.
fn thin2(n: i64, s: Vertex, t: Vertex) -> Vec<Vertex> {
    if s.y > t.y || (s.y == t.y && s.x > t.x) {
        let mut p = thin2(n, t, s);
        p.reverse();
        return p;
    }
    if s.y == t.y {
        // separated pair: cover the bigger side with a U-turn
        let up = n - s.y;
        let down = s.y - 1;
        let mut out = vec![s];
        if up >= down {
            for y in s.y + 1..=n {
                out.push(Vertex::new(s.x, y));
            }
            for y in (s.y..=n).rev() {
                out.push(Vertex::new(t.x, y));
            }
        } else {
            for y in (1..s.y).rev() {
                out.push(Vertex::new(s.x, y));
            }
            for y in 1..=s.y {
                out.push(Vertex::new(t.x, y));
            }
        }
        return out;
    }
    // s.y < t.y: enumerate start mode x middle skip x top mode, keep the
    // longest candidate that really ends at t.
    let mut best: Vec<Vertex> = Vec::new();
    for start_mode in 0..3 {
        // 0 = dip below, 1 = straight, 2 = cross first
        if start_mode == 0 && s.y == 1 {
            continue;
        }
        for skip in 0..2 {
            if skip == 1 && t.y - s.y < 2 {
                continue;
            }
            for top_mode in 0..2 {
                // 0 = dip above (requires arrival across from t), 1 = none
                if top_mode == 0 && t.y == n {
                    continue;
                }
                if let Some(cand) = thin2_candidate(n, s, t, start_mode, skip == 1, top_mode == 0)
                {
                    if cand.len() > best.len() {
                        best = cand;
                    }
                }
            }
        }
    }
    debug_assert!(!best.is_empty());
    best
}

fn thin2_candidate(
    n: i64,
    s: Vertex,
    t: Vertex,
    start_mode: u8,
    skip: bool,
    top_dip: bool,
) -> Option<Vec<Vertex>> {
    let other = |x: i64| 3 - x;
    let mut out = vec![s];
    let mut cur_x = s.x;
    match start_mode {
        0 => {
            // dip below: cover rows 1..s.y fully, resurface across from s
            for y in (1..s.y).rev() {
                out.push(Vertex::new(s.x, y));
            }
            for y in 1..=s.y {
                out.push(Vertex::new(other(s.x), y));
            }
            cur_x = other(s.x);
        }
        1 => {}
        2 => {
            out.push(Vertex::new(other(s.x), s.y));
            cur_x = other(s.x);
        }
        _ => unreachable!(),
    }
    // climb rows s.y+1 .. t.y-1, crossing in each (except one when skipping)
    let mut skipped = false;
    for y in s.y + 1..t.y {
        out.push(Vertex::new(cur_x, y));
        if skip && !skipped {
            skipped = true;
            continue; // rise without crossing
        }
        out.push(Vertex::new(other(cur_x), y));
        cur_x = other(cur_x);
    }
    // enter row t.y
    out.push(Vertex::new(cur_x, t.y));
    if cur_x == t.x {
        if top_dip {
            return None; // cannot cover above after landing on t
        }
        return Some(out);
    }
    // arrived across from t
    if top_dip {
        for y in t.y + 1..=n {
            out.push(Vertex::new(cur_x, y));
        }
        for y in (t.y..=n).rev() {
            out.push(Vertex::new(t.x, y));
        }
    } else {
        out.push(t);
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// strip absorption

/// Extend a path living in columns 1..m-2 so it also covers columns m-1 and
/// m, by replacing one vertical edge of column m-2 with a snake through the
/// two fresh columns.
fn absorb_right_cols(path: &mut Vec<Vertex>, m: i64, n: i64) {
    let c = m - 2;
    let pos = path
        .windows(2)
        .position(|w| w[0].x == c && w[1].x == c && (w[0].y - w[1].y).abs() == 1);
    let Some(i) = pos else {
        debug_assert!(false, "no vertical absorb edge in column {c}");
        return;
    };
    let a = path[i];
    let b = path[i + 1];
    let mut detour = Vec::with_capacity(2 * n as usize);
    if b.y == a.y + 1 {
        // down the inner column, across the bottom, up the outer, back down
        for y in (1..=a.y).rev() {
            detour.push(Vertex::new(m - 1, y));
        }
        for y in 1..=n {
            detour.push(Vertex::new(m, y));
        }
        for y in (b.y..=n).rev() {
            detour.push(Vertex::new(m - 1, y));
        }
    } else {
        for y in a.y..=n {
            detour.push(Vertex::new(m - 1, y));
        }
        for y in (1..=n).rev() {
            detour.push(Vertex::new(m, y));
        }
        for y in 1..=b.y {
            detour.push(Vertex::new(m - 1, y));
        }
    }
    path.splice(i + 1..i + 1, detour);
}

/// Same as `absorb_right_cols` for the two rows above a path in rows 1..n-2.
fn absorb_top_rows(path: &mut Vec<Vertex>, m: i64, n: i64) {
    let r = n - 2;
    let pos = path
        .windows(2)
        .position(|w| w[0].y == r && w[1].y == r && (w[0].x - w[1].x).abs() == 1);
    let Some(i) = pos else {
        debug_assert!(false, "no horizontal absorb edge in row {r}");
        return;
    };
    let a = path[i];
    let b = path[i + 1];
    let mut detour = Vec::with_capacity(2 * m as usize);
    if b.x == a.x + 1 {
        for x in (1..=a.x).rev() {
            detour.push(Vertex::new(x, n - 1));
        }
        for x in 1..=m {
            detour.push(Vertex::new(x, n));
        }
        for x in (b.x..=m).rev() {
            detour.push(Vertex::new(x, n - 1));
        }
    } else {
        for x in a.x..=m {
            detour.push(Vertex::new(x, n - 1));
        }
        for x in (1..=m).rev() {
            detour.push(Vertex::new(x, n));
        }
        for x in 1..=b.x {
            detour.push(Vertex::new(x, n - 1));
        }
    }
    path.splice(i + 1..i + 1, detour);
}

// ---------------------------------------------------------------------------
// cornered placements

/// Both endpoints hug opposite vertical borders of a short grid (n <= 6).
/// Solve a small block around each endpoint exactly, and join them with
/// full-column U sweeps across the middle.
fn cornered_thin(m: i64, n: i64, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mut best: Vec<Vertex> = Vec::new();
    for ja in 1..=5i64 {
        if ja < s.x || ja * n > EXHAUSTIVE_MAX {
            continue;
        }
        for jb in 1..=5i64 {
            if m - jb + 1 > t.x || jb * n > EXHAUSTIVE_MAX || ja + jb > m {
                continue;
            }
            let sweep_w = m - ja - jb;
            // With a sweep in the middle the junction rows must be corner
            // rows for the U chain; with the blocks adjacent any row works.
            let rows: Vec<i64> = if sweep_w == 0 {
                (1..=n).collect()
            } else {
                vec![1, n]
            };
            for ey_a in rows {
                let exit_a = Vertex::new(ja, ey_a);
                if exit_a == s {
                    continue;
                }
                // sweep: U pairs keep the chain row, a single column flips it
                let ey_b = if sweep_w % 2 == 0 { ey_a } else { n + 1 - ey_a };
                let enter_b = Vertex::new(1, ey_b);
                let t_local = Vertex::new(t.x - (m - jb), t.y);
                if enter_b == t_local {
                    continue;
                }
                let part_a = brute_force(ja, n, s, exit_a);
                let part_b = brute_force(jb, n, enter_b, t_local);
                let total = part_a.len() + (sweep_w * n) as usize + part_b.len();
                if total <= best.len() {
                    continue;
                }
                let mut out = part_a;
                let mut row = ey_a;
                let mut x = ja + 1;
                if sweep_w % 2 == 1 {
                    // single full column, flipping the chain row
                    if row == 1 {
                        for y in 1..=n {
                            out.push(Vertex::new(x, y));
                        }
                    } else {
                        for y in (1..=n).rev() {
                            out.push(Vertex::new(x, y));
                        }
                    }
                    row = n + 1 - row;
                    x += 1;
                }
                while x < ja + 1 + sweep_w {
                    if row == 1 {
                        for y in 1..=n {
                            out.push(Vertex::new(x, y));
                        }
                        for y in (1..=n).rev() {
                            out.push(Vertex::new(x + 1, y));
                        }
                    } else {
                        for y in (1..=n).rev() {
                            out.push(Vertex::new(x, y));
                        }
                        for y in 1..=n {
                            out.push(Vertex::new(x + 1, y));
                        }
                    }
                    x += 2;
                }
                out.extend(
                    part_b
                        .into_iter()
                        .map(|v| Vertex::new(v.x + m - jb, v.y)),
                );
                debug_assert_eq!(out.len(), total);
                best = out;
            }
        }
    }
    assert!(
        !best.is_empty(),
        "cornered_thin found no feasible split: {m}x{n} {s}->{t}"
    );
    best
}

fn local_color_white(v: Vertex) -> bool {
    (v.x + v.y) % 2 == 0
}

fn color_delta(cells: i64, u: Vertex, v: Vertex) -> i64 {
    let (wu, wv) = (local_color_white(u), local_color_white(v));
    if cells % 2 == 0 {
        if wu != wv {
            0
        } else {
            1
        }
    } else if wu && wv {
        0
    } else if wu != wv {
        1
    } else {
        2
    }
}

/// Diagonal cornered case (endpoints near opposite corners, n >= 7):
/// split at a middle column and solve both halves recursively, choosing the
/// junction row and cut position by the color accounting.
fn diag_split(m: i64, n: i64, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mid = m / 2;
    let mut chosen: Option<(i64, i64, i64)> = None; // (delta, c, yj)
    for c in [mid, mid - 1, mid + 1] {
        if c <= s.x || c < 3 || c > m - 3 || c + 1 >= t.x {
            continue;
        }
        for yj in [1, n] {
            let a = Vertex::new(c, yj);
            let b_local = Vertex::new(1, yj);
            let t_local = Vertex::new(t.x - c, t.y);
            if a == s || b_local == t_local {
                continue;
            }
            let da = color_delta(c * n, s, a);
            let db = color_delta((m - c) * n, b_local, t_local);
            let d = da + db;
            if chosen.is_none_or(|(bd, _, _)| d < bd) {
                chosen = Some((d, c, yj));
            }
        }
    }
    let Some((_, c, yj)) = chosen else {
        // No room for a middle cut (m = 7 with endpoints pressed against the
        // borders): the transposed problem is still cornered and its end
        // blocks are small enough for exhaustive fixups.
        let p = cornered_thin(n, m, transpose_pt(s), transpose_pt(t));
        return p.into_iter().map(transpose_pt).collect();
    };
    let part_a = build(c, n, s, Vertex::new(c, yj));
    let part_b = build(m - c, n, Vertex::new(1, yj), Vertex::new(t.x - c, t.y));
    let mut out = part_a;
    out.extend(part_b.into_iter().map(|v| Vertex::new(v.x + c, v.y)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::validate_path;

    fn v(x: i64, y: i64) -> Vertex {
        Vertex::new(x, y)
    }

    fn check(m: i64, n: i64, s: Vertex, t: Vertex) -> usize {
        let p = build(m, n, s, t);
        assert_eq!(p.first(), Some(&s), "{m}x{n} {s}->{t}");
        assert_eq!(p.last(), Some(&t), "{m}x{n} {s}->{t}");
        validate_path(&p, &RectGrid::new(m, n))
            .unwrap_or_else(|e| panic!("{m}x{n} {s}->{t}: {e}"));
        p.len()
    }

    #[test]
    fn thin2_matches_exhaustive() {
        for n in 2..=12 {
            for sy in 1..=n {
                for sx in 1..=2 {
                    for ty in 1..=n {
                        for tx in 1..=2 {
                            let (s, t) = (v(sx, sy), v(tx, ty));
                            if s == t {
                                continue;
                            }
                            let got = thin2(n, s, t);
                            assert_eq!(got.first(), Some(&s));
                            assert_eq!(got.last(), Some(&t));
                            validate_path(&got, &RectGrid::new(2, n)).unwrap();
                            let want = brute_force(2, n, s, t).len();
                            assert_eq!(got.len(), want, "2x{n} {s}->{t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brute_small_known_values() {
        assert_eq!(brute_force(2, 2, v(1, 1), v(2, 2)).len(), 3);
        assert_eq!(brute_force(3, 3, v(1, 1), v(3, 3)).len(), 9);
        assert_eq!(brute_force(3, 3, v(1, 1), v(2, 1)).len(), 8);
        assert_eq!(brute_force(4, 4, v(1, 1), v(4, 4)).len(), 15);
    }

    #[test]
    fn covers_all_but_two_midsize() {
        // every endpoint pair on a battery of grids with both dims >= 3
        for (m, n) in [
            (6i64, 5i64),
            (7, 4),
            (9, 3),
            (6, 6),
            (13, 3),
            (7, 5),
            (7, 7),
            (8, 7),
        ] {
            for s in RectGrid::new(m, n).vertices() {
                for t in RectGrid::new(m, n).vertices() {
                    if s == t {
                        continue;
                    }
                    let len = check(m, n, s, t);
                    assert!(
                        len as i64 >= m * n - 2,
                        "{m}x{n} {s}->{t}: got {len}, want >= {}",
                        m * n - 2
                    );
                }
            }
        }
    }

    #[test]
    fn covers_all_but_two_large_spotcheck() {
        let cases = [
            (64i64, 64i64, v(1, 1), v(64, 64)),
            (64, 64, v(3, 2), v(62, 64)),
            (64, 64, v(30, 30), v(31, 30)),
            (40, 64, v(1, 64), v(40, 1)),
            (64, 7, v(2, 3), v(63, 6)),
            (17, 23, v(9, 11), v(9, 12)),
        ];
        for (m, n, s, t) in cases {
            let len = check(m, n, s, t);
            assert!(len as i64 >= m * n - 2, "{m}x{n} {s}->{t}: {len}");
        }
    }

    #[test]
    fn deterministic() {
        let a = build(10, 9, v(2, 2), v(9, 8));
        let b = build(10, 9, v(2, 2), v(9, 8));
        assert_eq!(a, b);
    }
}

//! Deterministic ASCII and SVG renderings of paths and cycles on a grid,
//! drawn in the usual figure style: structure edges solid, the remaining
//! grid edges dotted.

use crate::grid::{RectGrid, Vertex};
use std::collections::HashSet;
use std::fmt::Write as _;

fn edge_set(vs: &[Vertex], closed: bool) -> HashSet<(Vertex, Vertex)> {
    let mut set = HashSet::new();
    let n = vs.len();
    let last = if closed { n } else { n.saturating_sub(1) };
    for i in 0..last {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        set.insert((a.min(b), a.max(b)));
    }
    set
}

/// Grid picture with `o` vertices, `--`/`|` for structure edges and
/// `··`-style dots for the other grid edges. Rows print top down.
pub fn ascii(grid: &RectGrid, vs: &[Vertex], closed: bool) -> String {
    let edges = edge_set(vs, closed);
    let on: HashSet<Vertex> = vs.iter().copied().collect();
    let has = |a: Vertex, b: Vertex| edges.contains(&(a.min(b), a.max(b)));
    let mut out = String::new();
    for y in (grid.oy..=grid.y_max()).rev() {
        for x in grid.ox..=grid.x_max() {
            let v = Vertex::new(x, y);
            out.push(if on.contains(&v) { 'o' } else { '.' });
            if x < grid.x_max() {
                let r = Vertex::new(x + 1, y);
                out.push_str(if has(v, r) { "--" } else { "  " });
            }
        }
        out.push('\n');
        if y > grid.oy {
            for x in grid.ox..=grid.x_max() {
                let v = Vertex::new(x, y);
                let d = Vertex::new(x, y - 1);
                out.push(if has(v, d) { '|' } else { ' ' });
                if x < grid.x_max() {
                    out.push_str("  ");
                }
            }
            out.push('\n');
        }
    }
    out
}

const CELL: i64 = 24;
const MARGIN: i64 = 24;

/// Fixed-order SVG: dotted grid first, then the structure polyline, then
/// the vertices, so identical inputs give byte-identical output.
pub fn svg(grid: &RectGrid, vs: &[Vertex], closed: bool) -> String {
    let w = MARGIN * 2 + (grid.m - 1) * CELL;
    let h = MARGIN * 2 + (grid.n - 1) * CELL;
    let px = |v: Vertex| -> (i64, i64) {
        (
            MARGIN + (v.x - grid.ox) * CELL,
            h - MARGIN - (v.y - grid.oy) * CELL,
        )
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for y in grid.oy..=grid.y_max() {
        for x in grid.ox..=grid.x_max() {
            let v = Vertex::new(x, y);
            let (cx, cy) = px(v);
            if x < grid.x_max() {
                let (dx, dy) = px(Vertex::new(x + 1, y));
                let _ = writeln!(
                    out,
                    r##"<line x1="{cx}" y1="{cy}" x2="{dx}" y2="{dy}" stroke="#999" stroke-width="1" stroke-dasharray="2,3"/>"##
                );
            }
            if y < grid.y_max() {
                let (dx, dy) = px(Vertex::new(x, y + 1));
                let _ = writeln!(
                    out,
                    r##"<line x1="{cx}" y1="{cy}" x2="{dx}" y2="{dy}" stroke="#999" stroke-width="1" stroke-dasharray="2,3"/>"##
                );
            }
        }
    }
    if !vs.is_empty() {
        let mut points = String::new();
        for v in vs {
            let (x, y) = px(*v);
            let _ = write!(points, "{x},{y} ");
        }
        if closed {
            let (x, y) = px(vs[0]);
            let _ = write!(points, "{x},{y}");
        }
        let _ = writeln!(
            out,
            r##"<polyline points="{}" fill="none" stroke="#000" stroke-width="2"/>"##,
            points.trim_end()
        );
    }
    for v in vs {
        let (x, y) = px(*v);
        let _ = writeln!(out, r##"<circle cx="{x}" cy="{y}" r="4" fill="#000"/>"##);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_small_cycle() {
        let g = RectGrid::new(2, 2);
        let c = vec![
            Vertex::new(1, 1),
            Vertex::new(1, 2),
            Vertex::new(2, 2),
            Vertex::new(2, 1),
        ];
        let pic = ascii(&g, &c, true);
        assert_eq!(pic, "o--o\n|  |\no--o\n");
    }

    #[test]
    fn deterministic_svg() {
        let g = RectGrid::new(3, 2);
        let p = vec![Vertex::new(1, 1), Vertex::new(2, 1), Vertex::new(2, 2)];
        assert_eq!(svg(&g, &p, false), svg(&g, &p, false));
        assert!(svg(&g, &p, false).starts_with("<svg"));
    }
}

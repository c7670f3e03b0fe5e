//! Lattice primitives: vertices, parity coloring, rectangular and solid grids,
//! path and cycle sequences.
//!
//! Length convention used everywhere in this crate: the length of a path or
//! cycle is its number of **vertices**. A path of length k has k-1 edges, a
//! cycle of length k has k edges.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;

pub type Coord = i64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vertex {
    pub x: Coord,
    pub y: Coord,
}

impl Vertex {
    pub const fn new(x: Coord, y: Coord) -> Self {
        Vertex { x, y }
    }

    pub fn color(self) -> Color {
        if (self.x + self.y) % 2 == 0 {
            Color::White
        } else {
            Color::Black
        }
    }

    pub fn manhattan(self, other: Vertex) -> i64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    pub fn is_adjacent(self, other: Vertex) -> bool {
        self.manhattan(other) == 1
    }

    pub fn step(self, dir: EdgeDir) -> Vertex {
        let (dx, dy) = dir.delta();
        Vertex::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    White,
    Black,
}

/// White iff x+y is even.
pub fn color(v: Vertex) -> Color {
    v.color()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeDir {
    Up,
    Down,
    Left,
    Right,
}

impl EdgeDir {
    pub fn opposite(self) -> EdgeDir {
        match self {
            EdgeDir::Up => EdgeDir::Down,
            EdgeDir::Down => EdgeDir::Up,
            EdgeDir::Left => EdgeDir::Right,
            EdgeDir::Right => EdgeDir::Left,
        }
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            EdgeDir::Up => (0, 1),
            EdgeDir::Down => (0, -1),
            EdgeDir::Left => (-1, 0),
            EdgeDir::Right => (1, 0),
        }
    }

    /// Direction of the unit edge from `a` to `b`, if they are adjacent.
    pub fn between(a: Vertex, b: Vertex) -> Option<EdgeDir> {
        match (b.x - a.x, b.y - a.y) {
            (0, 1) => Some(EdgeDir::Up),
            (0, -1) => Some(EdgeDir::Down),
            (-1, 0) => Some(EdgeDir::Left),
            (1, 0) => Some(EdgeDir::Right),
            _ => None,
        }
    }

    pub fn is_perpendicular(self, other: EdgeDir) -> bool {
        let (ax, ay) = self.delta();
        let (bx, by) = other.delta();
        ax * bx + ay * by == 0
    }

    /// z-component of the cross product of the two direction vectors.
    /// Negative means `other` is a clockwise (right) turn after `self`
    /// when y grows upward.
    pub fn cross(self, other: EdgeDir) -> i64 {
        let (ax, ay) = self.delta();
        let (bx, by) = other.delta();
        ax * by - ay * bx
    }
}

/// Anything that can answer vertex membership.
pub trait GridLike {
    fn contains_vertex(&self, v: Vertex) -> bool;
}

/// Axis-parallel rectangular grid graph. The vertex set is
/// `{ (x,y) : ox <= x < ox+m, oy <= y < oy+n }`, so subgrids of a grid are
/// themselves `RectGrid` values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RectGrid {
    pub m: i64,
    pub n: i64,
    pub ox: i64,
    pub oy: i64,
}

impl RectGrid {
    /// Grid with origin (1,1), the coordinate frame used throughout.
    pub fn new(m: i64, n: i64) -> Self {
        assert!(m >= 1 && n >= 1, "grid dimensions must be at least 1");
        RectGrid { m, n, ox: 1, oy: 1 }
    }

    pub fn with_origin(m: i64, n: i64, ox: i64, oy: i64) -> Self {
        assert!(m >= 1 && n >= 1, "grid dimensions must be at least 1");
        RectGrid { m, n, ox, oy }
    }

    pub fn vertex_count(&self) -> usize {
        (self.m * self.n) as usize
    }

    pub fn x_max(&self) -> i64 {
        self.ox + self.m - 1
    }

    pub fn y_max(&self) -> i64 {
        self.oy + self.n - 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let g = *self;
        (g.oy..=g.y_max()).flat_map(move |y| (g.ox..=g.x_max()).map(move |x| Vertex::new(x, y)))
    }
}

impl GridLike for RectGrid {
    fn contains_vertex(&self, v: Vertex) -> bool {
        v.x >= self.ox && v.x <= self.x_max() && v.y >= self.oy && v.y <= self.y_max()
    }
}

/// Vertex count of every shortest path between `s` and `t`.
pub fn shortest_len(s: Vertex, t: Vertex) -> usize {
    (s.manhattan(t) + 1) as usize
}

/// Deterministic monotone shortest path: all horizontal steps first, then all
/// vertical steps.
pub fn monotone_shortest_path(grid: &RectGrid, s: Vertex, t: Vertex) -> Result<PathSeq> {
    for v in [s, t] {
        if !grid.contains_vertex(v) {
            return Err(Error::VertexOutOfGrid(v));
        }
    }
    let mut vs = Vec::with_capacity(shortest_len(s, t));
    let mut cur = s;
    vs.push(cur);
    let sx = (t.x - s.x).signum();
    while cur.x != t.x {
        cur = Vertex::new(cur.x + sx, cur.y);
        vs.push(cur);
    }
    let sy = (t.y - s.y).signum();
    while cur.y != t.y {
        cur = Vertex::new(cur.x, cur.y + sy);
        vs.push(cur);
    }
    Ok(PathSeq::from_valid(vs))
}

/// True iff the path contains no pair of opposite edge directions.
pub fn is_monotone(path: &PathSeq) -> bool {
    let mut seen = HashSet::new();
    for d in path.edge_dirs() {
        if seen.contains(&d.opposite()) {
            return false;
        }
        seen.insert(d);
    }
    true
}

/// First structural violation found in a vertex sequence, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooShort,
    OutOfGrid(Vertex),
    NonUnitStep(usize),
    RepeatedVertex(Vertex),
    NotClosed,
    OddCycleLength(usize),
    ParityMismatch,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooShort => write!(f, "sequence too short"),
            Violation::OutOfGrid(v) => write!(f, "vertex {v} outside the grid"),
            Violation::NonUnitStep(i) => write!(f, "non-unit step at position {i}"),
            Violation::RepeatedVertex(v) => write!(f, "vertex {v} repeats"),
            Violation::NotClosed => write!(f, "cycle endpoints are not adjacent"),
            Violation::OddCycleLength(n) => write!(f, "cycle length {n} is odd or below 4"),
            Violation::ParityMismatch => write!(f, "length parity contradicts endpoint colors"),
        }
    }
}

fn check_steps_and_simplicity(vs: &[Vertex]) -> std::result::Result<(), Violation> {
    let mut seen = HashSet::with_capacity(vs.len());
    for (i, w) in vs.windows(2).enumerate() {
        if !w[0].is_adjacent(w[1]) {
            return Err(Violation::NonUnitStep(i));
        }
    }
    for &v in vs {
        if !seen.insert(v) {
            return Err(Violation::RepeatedVertex(v));
        }
    }
    Ok(())
}

/// Validate a path against a grid: containment, unit steps, simplicity and
/// the length-parity consequence of 2-colorability.
pub fn validate_path<G: GridLike>(vs: &[Vertex], grid: &G) -> std::result::Result<(), Violation> {
    if vs.is_empty() {
        return Err(Violation::TooShort);
    }
    for &v in vs {
        if !grid.contains_vertex(v) {
            return Err(Violation::OutOfGrid(v));
        }
    }
    check_steps_and_simplicity(vs)?;
    let even = vs.len().is_multiple_of(2);
    let ends_differ = vs[0].color() != vs[vs.len() - 1].color();
    if even != ends_differ {
        return Err(Violation::ParityMismatch);
    }
    Ok(())
}

/// Validate a cycle against a grid: containment, unit steps (including the
/// closing edge), simplicity, and even length of at least 4.
pub fn validate_cycle<G: GridLike>(vs: &[Vertex], grid: &G) -> std::result::Result<(), Violation> {
    if vs.len() < 4 || !vs.len().is_multiple_of(2) {
        return Err(Violation::OddCycleLength(vs.len()));
    }
    for &v in vs {
        if !grid.contains_vertex(v) {
            return Err(Violation::OutOfGrid(v));
        }
    }
    check_steps_and_simplicity(vs)?;
    if !vs[vs.len() - 1].is_adjacent(vs[0]) {
        return Err(Violation::NotClosed);
    }
    Ok(())
}

/// A simple path stored as its vertex sequence, first vertex `s`, last `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathSeq {
    vertices: Vec<Vertex>,
}

impl PathSeq {
    pub fn try_new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Invalid(Violation::TooShort));
        }
        check_steps_and_simplicity(&vertices).map_err(Error::Invalid)?;
        Ok(PathSeq { vertices })
    }

    /// Wrap a sequence already known to satisfy the path invariants.
    pub(crate) fn from_valid(vertices: Vec<Vertex>) -> Self {
        debug_assert!(check_steps_and_simplicity(&vertices).is_ok());
        PathSeq { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn s(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn t(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn reversed(&self) -> PathSeq {
        let mut vs = self.vertices.clone();
        vs.reverse();
        PathSeq { vertices: vs }
    }

    pub fn edge_dirs(&self) -> impl Iterator<Item = EdgeDir> + '_ {
        self.vertices
            .windows(2)
            .map(|w| EdgeDir::between(w[0], w[1]).expect("path invariant"))
    }
}

/// A simple cycle stored clockwise (negative shoelace area with y growing
/// upward), rotated to start at its lexicographically smallest vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleSeq {
    vertices: Vec<Vertex>,
}

impl CycleSeq {
    pub fn try_new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 4 || !vertices.len().is_multiple_of(2) {
            return Err(Error::Invalid(Violation::OddCycleLength(vertices.len())));
        }
        check_steps_and_simplicity(&vertices).map_err(Error::Invalid)?;
        if !vertices[vertices.len() - 1].is_adjacent(vertices[0]) {
            return Err(Error::Invalid(Violation::NotClosed));
        }
        Ok(Self::canonical(vertices))
    }

    /// Canonicalize a structurally valid cyclic sequence.
    pub(crate) fn canonical(mut vertices: Vec<Vertex>) -> Self {
        if signed_area_doubled(&vertices) > 0 {
            vertices.reverse();
        }
        let min_pos = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .map(|(i, _)| i)
            .unwrap();
        vertices.rotate_left(min_pos);
        CycleSeq { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        self.vertices[i % self.vertices.len()]
    }

    /// Directed edge i in the stored clockwise order.
    pub fn edge(&self, i: usize) -> (Vertex, Vertex) {
        (self.vertex(i), self.vertex(i + 1))
    }

    pub fn contains_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Index of the undirected edge {a,b} in the stored order, if present.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        (0..self.len()).find(|&i| {
            let (u, v) = self.edge(i);
            (u, v) == (a, b) || (u, v) == (b, a)
        })
    }

    pub fn first_edge(&self) -> (Vertex, Vertex) {
        self.edge(0)
    }
}

/// Twice the signed shoelace area of the closed polygon through `vs`.
pub fn signed_area_doubled(vs: &[Vertex]) -> i128 {
    let mut acc: i128 = 0;
    for i in 0..vs.len() {
        let a = vs[i];
        let b = vs[(i + 1) % vs.len()];
        acc += a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128;
    }
    acc
}

/// A finite grid graph given by an explicit vertex set.
#[derive(Clone, Debug)]
pub struct SolidGrid {
    set: HashSet<Vertex>,
}

impl SolidGrid {
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(verts: I) -> Self {
        SolidGrid {
            set: verts.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vertex> {
        self.set.iter()
    }

    /// True iff the complement of the vertex set in the infinite grid is
    /// connected, checked by flood fill over the bounding box inflated by one.
    pub fn is_solid(&self) -> bool {
        if self.set.is_empty() {
            return true;
        }
        let min_x = self.set.iter().map(|v| v.x).min().unwrap() - 1;
        let max_x = self.set.iter().map(|v| v.x).max().unwrap() + 1;
        let min_y = self.set.iter().map(|v| v.y).min().unwrap() - 1;
        let max_y = self.set.iter().map(|v| v.y).max().unwrap() + 1;
        let w = (max_x - min_x + 1) as usize;
        let h = (max_y - min_y + 1) as usize;
        let idx = |v: Vertex| ((v.y - min_y) as usize) * w + ((v.x - min_x) as usize);
        let mut visited = vec![false; w * h];
        let start = Vertex::new(min_x, min_y);
        let mut queue = vec![start];
        visited[idx(start)] = true;
        let mut reached = 0usize;
        while let Some(v) = queue.pop() {
            reached += 1;
            for d in [EdgeDir::Up, EdgeDir::Down, EdgeDir::Left, EdgeDir::Right] {
                let u = v.step(d);
                if u.x < min_x || u.x > max_x || u.y < min_y || u.y > max_y {
                    continue;
                }
                if self.set.contains(&u) || visited[idx(u)] {
                    continue;
                }
                visited[idx(u)] = true;
                queue.push(u);
            }
        }
        reached == w * h - self.set.len()
    }
}

impl GridLike for SolidGrid {
    fn contains_vertex(&self, v: Vertex) -> bool {
        self.set.contains(&v)
    }
}

/// Convenience: true iff the explicit vertex set is solid.
pub fn is_solid(g: &SolidGrid) -> bool {
    g.is_solid()
}

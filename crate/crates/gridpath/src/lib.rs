//! Constructive embedding of fixed-length cycles and paths in grid graphs.
//!
//! Lengths count **vertices** throughout: a path of length k has k-1 edges
//! and a cycle of length k has k edges. Cycles are stored clockwise (y grows
//! upward, negative shoelace area) starting at their lexicographically
//! smallest vertex, so equal cycles compare equal byte for byte.

pub mod caves;
pub mod cycles;
pub mod error;
pub mod grid;
pub mod grid3d;
pub mod json;
mod longest;
pub mod oracle;
pub mod parallel;
pub mod paths;
pub mod render;
mod ring;
pub mod scaling;

pub use error::{Error, Reason, Result};
pub use grid::{
    color, is_monotone, is_solid, monotone_shortest_path, shortest_len, validate_cycle,
    validate_path, Color, CycleSeq, EdgeDir, GridLike, PathSeq, RectGrid, SolidGrid, Vertex,
    Violation,
};

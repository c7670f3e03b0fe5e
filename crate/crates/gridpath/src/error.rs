use crate::grid::Vertex;
use thiserror::Error;

/// Why a requested cycle or path cannot exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    Dimensions,
    Parity,
    Range,
    SameVertex,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Dimensions => "dimensions",
            Reason::Parity => "parity",
            Reason::Range => "range",
            Reason::SameVertex => "same-vertex",
        }
    }
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} outside the grid")]
    VertexOutOfGrid(Vertex),
    #[error("cave is not contractible")]
    NotContractible,
    #[error("grid has no cycle (both dimensions must exceed 1)")]
    NoCycle,
    #[error("shrink budget must be even and within 0..=|C|-4, got {0}")]
    BudgetInvalid(usize),
    #[error("edge {0}-{1} is not an edge of the cycle")]
    EdgeNotInCycle(Vertex, Vertex),
    #[error("no cycle of the requested length: {0}")]
    NoSuchCycle(Reason),
    #[error("no path of the requested length: {0}")]
    NoSuchPath(Reason),
    #[error("vertex set is not solid")]
    NotSolid,
    #[error("cycle is not a Hamiltonian cycle of the grid")]
    NotHamiltonian,
    #[error("path is monotone, hence already shortest")]
    PathIsMonotone,
    #[error("target length has the wrong parity")]
    ParityMismatch,
    #[error("target length is below the shortest-path length")]
    BelowShortest,
    #[error("s and t must be distinct")]
    SameVertex,
    #[error("instance exceeds the oracle size bound of {0}")]
    BoundExceeded(usize),
    #[error("invalid structure: {0}")]
    Invalid(crate::grid::Violation),
}

pub type Result<T> = std::result::Result<T, Error>;

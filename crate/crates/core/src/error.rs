use thiserror::Error;

use crate::coloring::Color;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has no color")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) is colored more than once")]
    DuplicateEdge(usize, usize),
    #[error("color {color} is outside the palette 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("vertex {vertex} is outside 0..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("a coloring needs at least one vertex and one color")]
    EmptyColoring,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("substitution needs one part per base vertex (base has {expected}, got {got})")]
    PartsMismatch { expected: usize, got: usize },
    #[error("substitution needs a nonempty list of parts")]
    EmptyPartsList,
    #[error("coloring is not Gallai: ({0}, {1}, {2}) is a rainbow triangle")]
    NotGallai(usize, usize, usize),
    #[error("a Gallai partition needs at least two vertices")]
    TooSmall,
    #[error("edges between parts {0} and {1} use more than one color")]
    NotMonochromaticBetween(usize, usize),
    #[error("cycle length {0} is not an even number >= 4")]
    OddLength(usize),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("invalid i-vector: {0}")]
    InvalidIVector(String),
    #[error("parameters out of range: {0}")]
    RangeViolation(String),
    #[error("construction failed its own certification: {0}")]
    ConstructionInvalid(String),
    #[error("soundness spot-check failed: {0}")]
    SpotCheckFailed(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

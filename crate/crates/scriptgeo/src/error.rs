use thiserror::Error;

use crate::cell::CellId;

/// Library-wide error type. Operations that report structured verdicts
/// (validation, duality obstructions) use dedicated result types instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown cell `{0}` (dimension {})", .0.dim)]
    UnknownCell(CellId),
    #[error("duplicate cell `{0}` in dimension {}", .0.dim)]
    DuplicateCell(CellId),
    #[error("search budget of {budget} nodes exhausted; result unknown")]
    SearchBudgetExceeded { budget: u64 },
    #[error("cell `{0}` is not floating: its boundary is nonzero")]
    NotFloating(CellId),
    #[error("cell `{0}` is not free: it appears in a higher boundary")]
    NotFree(CellId),
    #[error("chain is not a cycle: boundary is {0}")]
    NotACycle(String),
    #[error("selected cells do not form a cocycle: d(indicator) = {0}")]
    NotACocycle(String),
    #[error("boundaries of `{keep}` and `{remove}` do not match under the requested gluing")]
    BoundaryMismatch { keep: CellId, remove: CellId },
    #[error("gluing would produce the non-integer coefficient {num}/{den} in `{cell}`")]
    NonIntegerReplacement { cell: CellId, num: String, den: String },
    #[error("`{0}` does not carry the melt parts proportionally to the declared combination")]
    ProportionalityViolation(CellId),
    #[error("part boundaries do not sum to the boundary of `{0}`")]
    BoundarySumMismatch(CellId),
    #[error("offprint row `{row}` has cycle rank {rank}, no unique assignment")]
    NotTight { row: String, rank: usize },
    #[error("offprint row `{row}` admits no nonzero assignment")]
    NoSolution { row: String },
    #[error("script `{0}` has no accumulator")]
    MissingAccumulator(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("extension broke the complex property: {0}")]
    ComplexViolation(String),
    #[error("chain mixes dimensions {0:?}")]
    NonHomogeneous(Vec<i32>),
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("semantic error at `{cell}`: {message}")]
    Semantic { cell: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

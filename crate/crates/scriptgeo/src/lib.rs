//! Exact-arithmetic computations on finite chain complexes of free integer
//! modules carrying an accumulator level ("scripts"): validation, homology
//! through Smith normal forms, tightness analysis, an editing calculus,
//! duality and discrete Dirac spectra, Cartesian products, simplicial
//! refinement, a catalog of reference models and a line-oriented file
//! format.
//!
//! All structural computation is integer-exact; floating point appears only
//! in the eigensolver, whose results are cross-checked against exact traces
//! and kernel dimensions.

pub mod catalog;
pub mod cell;
pub mod equiv;
pub mod error;
pub mod homology;
pub mod tightness;
pub mod matrix;
pub mod script;

pub use cell::{CellId, Chain, Int, MixedChain};
pub use error::{Error, Result};
pub use homology::HomologyGroup;
pub use matrix::{IntMatrix, SmithForm};
pub use script::{Offprint, Script, ScriptBuilder, ValidationReport, Violation};

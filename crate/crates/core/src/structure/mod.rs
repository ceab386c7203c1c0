//! Finite-dimensional Lie algebras of derivations and their structure.

mod algebra;
mod span;
mod table;

pub use algebra::{LieAlgebra, ScExport, DEFAULT_DIM_CAP};
pub use span::{element, function_relations, DerivationSpan};
pub use table::{is_zero_vec, lin, unit, IdealLines, Predicates, SeriesKind, StructureConstants, Subspace};

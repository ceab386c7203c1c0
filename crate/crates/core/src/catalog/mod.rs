//! The twelve families of finite-dimensional Lie algebras of planar vector
//! fields. Each has abstract structure constants and an explicit realization,
//! and `verify` checks that the two agree.

mod canonical;
mod realize;
mod tables;
mod types;
mod verify;

pub use canonical::{
    canonical_form, grid, normalize_affine, normalize_eigenvalues, present_affine, present_eigenvalues,
    AffinePresentation, EigenPresentation,
};
pub use realize::realize;
pub use tables::{abstract_table, sl3_matrices, uncorrected_table};
pub use types::{parse_q, Sl2Variant, TheoremType};
pub use verify::{diagonal_match, verify_realization, VerifyReport};

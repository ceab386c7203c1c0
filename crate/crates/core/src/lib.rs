//! Exact toolkit for finite-dimensional Lie algebras of planar vector fields
//! with rational-function coefficients.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod polyrat;
pub mod ratlemma;
pub mod structure;
pub mod vectorfield;

pub use error::{Error, Result};
pub use exec::Exec;

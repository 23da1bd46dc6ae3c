//! Exact enumeration of alternating sign matrices and their symmetry classes,
//! together with the closed forms, partition functions and generating-function
//! identities that describe their refined counts.

pub mod arith;
pub mod asm;
pub mod closed_forms;
pub mod enumerate;
mod error;
pub mod identities;
pub mod linalg;
pub mod six_vertex;
pub mod tilings;

pub use error::{Error, Result};

//! Exact computations with rational curves in complex projective space.
//!
//! Everything is done over the Gaussian rationals Q(i): curve
//! parametrizations are tuples of binary forms, transformations are
//! matrices up to scale, and every verdict is certified by an exact
//! polynomial identity.

pub mod algebra;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod projection;
pub mod projective;
pub mod report;

pub use error::{Error, Result};

//! Distributions of modular-height inversion statistics over finite Weyl
//! groups.
//!
//! For a Weyl group W with positive roots of known heights and a pair (k, h),
//! each element is scored by how many of its inversion roots have height
//! congruent to h mod k. This crate computes the exact count of elements per
//! score, decides unimodality and palindromicity of the resulting coefficient
//! sequences, and checks the computations against embedded golden tables.
//!
//! Two engines produce the histograms: a Lehmer-style permutation walk for
//! type A (no group elements materialized) and a weak-order traversal of the
//! root-system action for every other type. Both are exact, deterministic,
//! and split work across threads without changing a single count.

pub mod distribution;
pub mod error;
pub mod root_system;
pub mod stats;
pub mod typea;
pub mod verify;
pub mod weyl;

pub use distribution::{Distribution, Unimodality};
pub use error::Error;
pub use root_system::{Family, GroupSpec, RootSystem};
pub use stats::{Permutation, StatSpec};
pub use weyl::{Element, InversionSet};

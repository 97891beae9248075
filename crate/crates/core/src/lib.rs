//! Colored Links–Gould invariants of knots and links, computed exactly from
//! braid presentations.
//!
//! The crate is layered bottom-up: [`laurent`] supplies exact arithmetic,
//! [`braid`] the inputs, [`statesum`] the contraction engine, [`rmatrices`]
//! and [`repcore`] the two independent sources of crossing operators, and
//! [`colored`] the invariants and identities built on top.

pub mod braid;
pub mod colored;
pub mod laurent;
pub mod linalg;
pub mod repcore;
pub mod rmatrices;
pub mod statesum;

/// Identifies the evaluation engine; results cached under one version are
/// not reused by another.
pub const ENGINE_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), "/", env!("CARGO_PKG_VERSION"));

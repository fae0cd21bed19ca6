//! Oriented Turán numbers and supersaturation, computed exactly on small graphs.
//!
//! The crate provides bitset oriented graphs ([`OrientedGraph`]), exact
//! copy counters for transitive tournaments and antidirected complete
//! bipartite patterns, digraph homomorphisms and compressibility, an exact
//! branch-and-bound solver for oriented Turán numbers, and checkers that
//! evaluate the supersaturation inequalities in exact arithmetic.

pub mod arith;
pub mod bits;
pub mod canonical;
pub mod count;
mod embed;
pub mod error;
pub mod graph;
pub mod homomorphism;
pub mod io;
pub mod pattern;
pub mod search;
pub mod suite;
pub mod verify;

pub use count::{
    count_copies, count_generic, count_kst, count_out_stars, count_profile, count_tt, CopyProfile,
};
pub use error::{Error, Result};
pub use graph::{OrientedGraph, PartSizes, MAX_VERTICES};
pub use pattern::{Pattern, PatternKind};

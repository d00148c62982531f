//! Core machinery for maximizing rainbow copies of a small pattern graph
//! over r-edge-colorings of `K_n`: pattern graphs and their automorphism
//! counts, colorings (seeded random, recursive blow-ups, pinned bases),
//! exact rainbow counting, exhaustive and stochastic maximization, and
//! exact-rational bounds and non-anti-commonality criteria.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `antiramsey` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod rainbow;
pub mod search;

pub use bounds::ExactRational;
pub use coloring::EdgeColoring;
pub use error::Error;
pub use graph::{build_graph, Graph, GraphSpec};
pub use rainbow::{count_rainbow_copies, rainbow_fraction, EmbeddingPatterns};
pub use search::{exact_rb, local_search, SearchParams, SearchResult};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;

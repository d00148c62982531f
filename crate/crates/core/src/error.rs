//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

use crate::graph::{MAX_BRUTE_FORCE_AUT, MAX_VERTICES};

/// Errors produced by graph construction, coloring generation, rainbow
/// counting, search, and bound evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A graph spec string does not match the grammar.
    SpecParse {
        /// The offending input.
        input: String,
        /// What went wrong.
        reason: &'static str,
    },
    /// A pattern graph exceeds the vertex limit.
    TooManyVertices {
        /// Requested vertex count.
        m: usize,
    },
    /// Automorphism counting falls back to permutation brute force, which
    /// is capped; larger graphs need a closed form (built-ins carry one).
    AutomorphismLimit {
        /// Vertex count of the offending graph.
        m: usize,
    },
    /// An argument is outside the operation's domain.
    Domain(String),
    /// Unknown built-in coloring name.
    UnknownBuiltin {
        /// The name that failed to resolve.
        name: String,
    },
    /// Exhaustive search would exceed the leaf-evaluation budget.
    BudgetExceeded {
        /// Estimated number of leaf colorings, as a decimal string (the
        /// true value can exceed `u64`).
        estimated_leaves: String,
        /// Configured budget.
        budget: u64,
    },
    /// A computation exceeds a configured resource cap.
    ResourceCap {
        /// What hit the cap.
        what: &'static str,
        /// The cap value.
        limit: u64,
    },
    /// A guarded floating-point comparison fell inside the safety margin
    /// and cannot be decided.
    Indeterminate {
        /// Left-hand side of the comparison.
        lhs: f64,
        /// Right-hand side of the comparison.
        rhs: f64,
        /// The margin that was violated.
        margin: f64,
    },
    /// A rainbow count does not fit in 64 bits.
    CountOverflow,
    /// A vertex index is out of range or repeated in a vertex-set argument.
    InvalidVertex {
        /// The offending vertex.
        vertex: usize,
        /// Host graph order.
        n: usize,
    },
    /// Monotonicity checks require consecutive values of n.
    NonConsecutiveN {
        /// n of the previous row.
        prev: usize,
        /// n of the offending row.
        next: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpecParse { input, reason } => {
                write!(f, "invalid graph spec {input:?}: {reason}")
            }
            Error::TooManyVertices { m } => {
                write!(f, "pattern graph has {m} vertices; the limit is {MAX_VERTICES}")
            }
            Error::AutomorphismLimit { m } => write!(
                f,
                "no closed-form automorphism count and brute force is capped at \
                 {MAX_BRUTE_FORCE_AUT} vertices (graph has {m})"
            ),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::UnknownBuiltin { name } => {
                write!(f, "unknown built-in coloring {name:?} (expected fig-k5 or rainbow:<a>)")
            }
            Error::BudgetExceeded {
                estimated_leaves,
                budget,
            } => write!(
                f,
                "exhaustive search needs about {estimated_leaves} leaf evaluations, \
                 over the budget of {budget}"
            ),
            Error::ResourceCap { what, limit } => {
                write!(f, "{what} exceeds the configured cap of {limit}")
            }
            Error::Indeterminate { lhs, rhs, margin } => write!(
                f,
                "comparison of {lhs} vs {rhs} is within the {margin} margin and \
                 cannot be decided reliably"
            ),
            Error::CountOverflow => write!(f, "rainbow count overflows u64"),
            Error::InvalidVertex { vertex, n } => {
                write!(f, "vertex {vertex} is out of range or repeated (host has {n} vertices)")
            }
            Error::NonConsecutiveN { prev, next } => {
                write!(f, "rb values must be given for consecutive n: {next} follows {prev}")
            }
        }
    }
}

impl core::error::Error for Error {}

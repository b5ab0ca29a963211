//! Exact counting of graphical degree sequences.
//!
//! The core quantity is the bounded partition function `P(N,k,l,s)` of
//! Barnes and Savage: the number of partitions of `N` into at most `l`
//! parts, each at most `k`, whose corank prefix sums shifted by `s`
//! dominate the row index up to the Durfee side. Counting zero-free
//! graphical degree sequences of length `n` reduces to summing such
//! values, and this crate provides:
//!
//! - [`partition`]: partitions, conjugation, coranks, the Erdős–Gallai
//!   graphicality test and bounded partition enumeration;
//! - [`oracle`]: definition-level brute-force counters used as ground
//!   truth in tests and the `verify` subcommand;
//! - [`dp`]: the rectangular baseline and the memory-optimized ragged
//!   dynamic programs, plus the three-variate `P(N,k,l)` recurrence;
//! - [`alloc_model`]: exact element-count models of the two table
//!   layouts;
//! - [`estimator`]: exact-uniform sampling of the even-sum bounded
//!   ensemble `E(n)` and Monte-Carlo estimation of the graphical
//!   fraction;
//! - [`report`]: CSV / JSON-lines serialization of results.
//!
//! All counts are arbitrary-precision integers; nothing in the counting
//! paths uses floating point.

pub mod alloc_model;
pub mod bounds;
pub mod dp;
pub mod error;
pub mod estimator;
pub mod oracle;
pub mod partition;
pub mod report;

pub use error::Error;

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

//! Pattern matching in generalized degenerate (GD) strings.
//!
//! A GD string is a sequence of segments, each a set of equal-length
//! strings; the pattern matches if it occurs in some member of the induced
//! language. This crate decides that existence question with three engines
//! and ties their costs back to an analytic prediction:
//!
//! - [`matcher::match_bruteforce`] — exhaustive reference oracle, returns a
//!   concrete [`gd_core::Occurrence`];
//! - [`matcher::match_threads`] — the shift-thread engine: one thread per
//!   pattern shift scans the segments left to right, tracking how much of
//!   the pattern is alive at each boundary via per-segment trie queries;
//! - [`grover_sim`] — a query-model simulation of the same procedure run as
//!   three nested Grover searches (shift / segment string / character),
//!   with a [`grover_sim::QueryLedger`] charging what a real execution
//!   would pay, verified against the `sqrt(m * n * N)`-style prediction in
//!   [`complexity`].
//!
//! Start with the runnable examples (`cargo run --example walkthrough`) or
//! the `gdmatch` binary (`run`, `gen`, `bench` subcommands).

pub mod cli;
pub mod complexity;
pub mod gd_core;
pub mod grover_sim;
pub mod matcher;
pub mod sample;
pub mod trie;

pub use gd_core::{GdError, GdString, Metrics, Occurrence, Pattern, Segment};
pub use matcher::MatchReport;

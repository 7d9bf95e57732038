//! Graph distance analytics centered on the triameter: the maximum,
//! over vertex triples, of the three pairwise distances' sum.
//!
//! The crate has three layers:
//!
//! * core graph machinery — [`graph::Graph`], graph6 and edge-list I/O,
//!   parametric families, exhaustive enumeration of small labeled
//!   graphs and trees;
//! * invariants — BFS distances, radius/diameter, girth, Wiener index,
//!   chromatic number, vertex connectivity, domination numbers, and the
//!   triameter itself with three interchangeable algorithms;
//! * a registry of 27 triameter statements ([`theorems`]) that can be
//!   checked on one graph or swept exhaustively over all small graphs.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --example compute_invariants
//! cargo run --example triameter_algorithms
//! cargo run --example families
//! cargo run --example graph6_io
//! cargo run --example domination
//! cargo run --example sweep
//! cargo run --example tree_sweep
//! cargo run --example ng_scan
//! ```
//!
//! The same capabilities are scriptable through the thin `trimetric`
//! binary; see the crate README.

pub mod domination;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod metrics;
pub mod report;
pub mod theorems;
pub mod triameter;

pub mod cli;

pub use error::{Error, Result};
pub use graph::Graph;

//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building graphs, parsing inputs,
/// or computing invariants.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed caller input: bad vertex index, empty graph, invalid
    /// family parameters, unparsable CLI values, and so on.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A graph6 string that does not decode. `offset` is the byte index
    /// into the input at which decoding failed.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// graph6 long-form input (order 63 or above) is not supported.
    #[error("unsupported graph6 form: {0}")]
    UnsupportedOrder(String),

    /// An exact-search operation was asked to run above its hard cap.
    #[error("{operation} supports n <= {cap}, got n = {n}")]
    CapExceeded {
        operation: &'static str,
        n: usize,
        cap: usize,
    },

    /// An invariant that is undefined for the given graph, e.g. the
    /// triameter of a disconnected graph.
    #[error("{parameter} is undefined here: {reason}")]
    Undefined {
        parameter: &'static str,
        reason: String,
    },

    /// A theorem identifier that is not in the registry.
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    /// Plumbed-through I/O failure (file inputs, report output).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Whitespace-separated edge-list format: a header `n m` followed by `m`
//! lines `u v` with 0-based endpoints.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses edge-list text. Token counts and every endpoint are validated;
/// errors name the offending token.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("edge list ended before {what}")))?;
        tok.parse().map_err(|_| {
            Error::InvalidInput(format!("edge list: {what} is not a number: {tok:?}"))
        })
    };
    let n = next_usize("vertex count")?;
    let m = next_usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let u = next_usize(&format!("endpoint 1 of edge {k}"))?;
        let v = next_usize(&format!("endpoint 2 of edge {k}"))?;
        edges.push((u, v));
    }
    if let Some(extra) = tokens.next() {
        return Err(Error::InvalidInput(format!(
            "edge list has trailing token {extra:?} after {m} edges"
        )));
    }
    Graph::from_edge_list(n, &edges)
}

/// Renders a graph in the same format, one edge per line.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

//! Vertex connectivity by exhaustive separator search.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for the separator search (2^16 subsets per size).
pub const MAX_CONNECTIVITY_ORDER: usize = 16;

/// Whether the subgraph induced on the vertices of `mask` is connected.
/// Only valid for single-word graphs (n <= 64); empty masks count as
/// connected.
pub(crate) fn mask_connected(g: &Graph, mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut visited = 1u64 << start;
    let mut frontier = visited;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= g.row(v)[0];
        }
        next &= mask & !visited;
        visited |= next;
        frontier = next;
    }
    visited == mask
}

/// Exact vertex connectivity of a connected graph with `n <= 16`:
/// the smallest k such that deleting some k vertices disconnects the
/// rest, or n - 1 when no such set exists (complete graphs).
pub fn vertex_connectivity(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > MAX_CONNECTIVITY_ORDER {
        return Err(Error::CapExceeded {
            operation: "vertex connectivity",
            n,
            cap: MAX_CONNECTIVITY_ORDER,
        });
    }
    if !g.is_connected() {
        return Err(Error::Undefined {
            parameter: "vertex connectivity",
            reason: "the graph is disconnected".into(),
        });
    }
    if n == 1 {
        return Ok(0);
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 1..n.saturating_sub(1) {
        for removal in 0..=full {
            if removal.count_ones() as usize != k {
                continue;
            }
            let rest = full & !removal;
            if rest.count_ones() >= 2 && !mask_connected(g, rest) {
                return Ok(k as u32);
            }
        }
    }
    Ok(n as u32 - 1)
}

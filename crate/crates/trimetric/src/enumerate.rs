//! Exhaustive enumeration of small labeled graphs.
//!
//! Connected graphs are streamed by walking all 2^C(n,2) edge masks and
//! keeping the connected ones; trees are streamed by decoding all n^(n-2)
//! Pruefer sequences. Both streams accept sub-ranges so scans can be
//! partitioned across workers deterministically.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

/// Largest order the connected-graph stream will enumerate; beyond this
/// the mask space (2^28 at n = 8) stops being a few-second sweep.
/// Stream larger graphs from graph6 files instead.
pub const MAX_ENUM_ORDER: usize = 7;

/// Largest order for the tree stream (9^7 = 4.8M sequences).
pub const MAX_TREE_ORDER: usize = 9;

/// Size of the full mask space for order `n`: 2^C(n,2).
pub fn mask_space(n: usize) -> Result<u64> {
    if n == 0 || n > 11 {
        return Err(Error::InvalidInput(format!(
            "mask enumeration covers 1 <= n <= 11, got {n}"
        )));
    }
    Ok(1u64 << pair_count(n))
}

/// Number of labeled trees on `n` vertices: n^(n-2).
pub fn tree_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("trees need n >= 1".into()));
    }
    if n <= 2 {
        return Ok(1);
    }
    Ok((n as u64).pow(n as u32 - 2))
}

/// Cursor over labeled connected graphs of one order, in mask order.
pub struct ConnectedGraphs {
    n: usize,
    range: Range<u64>,
}

/// Streams every labeled connected graph on `n <= MAX_ENUM_ORDER`
/// vertices in increasing mask order.
pub fn connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    let end = checked_space(n)?;
    connected_graphs_in(n, 0..end)
}

/// Same stream restricted to a mask sub-range; chunks with identical
/// boundaries always see identical graphs.
pub fn connected_graphs_in(n: usize, range: Range<u64>) -> Result<ConnectedGraphs> {
    let space = checked_space(n)?;
    if range.end > space {
        return Err(Error::InvalidInput(format!(
            "mask range end {} exceeds space {space}",
            range.end
        )));
    }
    Ok(ConnectedGraphs { n, range })
}

fn checked_space(n: usize) -> Result<u64> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::CapExceeded {
            operation: "connected-graph enumeration",
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    mask_space(n)
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        for mask in &mut self.range {
            let g = Graph::from_pair_mask(self.n, mask).expect("mask in range");
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Cursor over all labeled trees of one order, in Pruefer-code order.
pub struct LabeledTrees {
    n: usize,
    range: Range<u64>,
}

/// Streams every labeled tree on `n <= MAX_TREE_ORDER` vertices.
pub fn labeled_trees(n: usize) -> Result<LabeledTrees> {
    let end = checked_tree_count(n)?;
    labeled_trees_in(n, 0..end)
}

/// Same stream restricted to a sub-range of Pruefer indices.
pub fn labeled_trees_in(n: usize, range: Range<u64>) -> Result<LabeledTrees> {
    let count = checked_tree_count(n)?;
    if range.end > count {
        return Err(Error::InvalidInput(format!(
            "tree index range end {} exceeds count {count}",
            range.end
        )));
    }
    Ok(LabeledTrees { n, range })
}

fn checked_tree_count(n: usize) -> Result<u64> {
    if n > MAX_TREE_ORDER {
        return Err(Error::CapExceeded {
            operation: "labeled-tree enumeration",
            n,
            cap: MAX_TREE_ORDER,
        });
    }
    tree_count(n)
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let index = self.range.next()?;
        Some(tree_from_index(self.n, index))
    }
}

/// Decodes tree number `index` (big-endian base-n digits form the
/// Pruefer sequence).
fn tree_from_index(n: usize, index: u64) -> Graph {
    if n == 1 {
        return Graph::empty(1).unwrap();
    }
    if n == 2 {
        return Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    }
    let mut seq = vec![0usize; n - 2];
    let mut rest = index;
    for digit in seq.iter_mut().rev() {
        *digit = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    tree_from_pruefer(n, &seq)
}

/// Standard linear-time Pruefer decoding with the moving-pointer trick.
pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n).unwrap();
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &s in seq {
        g.add_edge(leaf, s).expect("pruefer edges are distinct");
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1).expect("final pruefer edge");
    g
}

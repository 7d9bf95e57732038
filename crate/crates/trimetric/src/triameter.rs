//! The triameter: the maximum over vertex triples of the three pairwise
//! distances' sum. Three interchangeable algorithms — a reference triple
//! scan, an eccentricity-pruned scan, and a leaf-only scan for trees —
//! plus a dispatcher that picks the right one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{bfs_distances, DistanceMatrix};

/// A triameter value together with one triple attaining it, sorted
/// ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriameterResult {
    pub value: u32,
    pub witness: [usize; 3],
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::Undefined {
            parameter: "triameter",
            reason: format!("needs at least three vertices, got {}", g.n()),
        });
    }
    Ok(())
}

fn disconnected() -> Error {
    Error::Undefined {
        parameter: "triameter",
        reason: "the graph is disconnected".into(),
    }
}

/// Reference implementation: all-pairs BFS, then every triple u < v < w.
/// The witness is the lexicographically smallest maximizing triple.
pub fn triameter_naive(g: &Graph) -> Result<TriameterResult> {
    guard(g)?;
    let dm = DistanceMatrix::compute(g);
    if !dm.all_finite() {
        return Err(disconnected());
    }
    let n = g.n();
    let mut best = 0u32;
    let mut witness = [0, 1, 2];
    for u in 0..n - 2 {
        for v in u + 1..n - 1 {
            let duv = dm.dist(u, v) as u32;
            for w in v + 1..n {
                let sum = duv + dm.dist(u, w) as u32 + dm.dist(v, w) as u32;
                if sum > best {
                    best = sum;
                    witness = [u, v, w];
                }
            }
        }
    }
    Ok(TriameterResult { value: best, witness })
}

/// Same answer as [`triameter_naive`], but the triple scan runs in
/// decreasing-eccentricity order so whole branches can be cut: every
/// pairwise distance in a triple is bounded by the triple's smallest
/// eccentricity, which only shrinks as the scan advances.
pub fn triameter_pruned(g: &Graph) -> Result<TriameterResult> {
    guard(g)?;
    let dm = DistanceMatrix::compute(g);
    if !dm.all_finite() {
        return Err(disconnected());
    }
    let n = g.n();
    let ecc = dm.eccentricities();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(ecc[v]), v));
    let mut best = 0u32;
    let mut witness = [0, 1, 2];
    for a in 0..n - 2 {
        let u = order[a];
        if 3 * ecc[u] as u32 <= best {
            break;
        }
        for b in a + 1..n - 1 {
            let v = order[b];
            // ecc[v] bounds all three distances of any remaining triple.
            if 3 * ecc[v] as u32 <= best {
                break;
            }
            let duv = dm.dist(u, v) as u32;
            if duv + 2 * ecc[v] as u32 <= best {
                continue;
            }
            for &w in &order[b + 1..] {
                let sum = duv + dm.dist(u, w) as u32 + dm.dist(v, w) as u32;
                if sum > best {
                    best = sum;
                    witness = [u, v, w];
                    witness.sort_unstable();
                }
            }
        }
    }
    Ok(TriameterResult { value: best, witness })
}

/// Tree specialization: a maximizing triple can always be pushed out to
/// leaves, so only leaves get a BFS. Paths (two leaves) are closed-form:
/// both ends plus any interior vertex give twice the length.
pub fn triameter_tree(t: &Graph) -> Result<TriameterResult> {
    guard(t)?;
    let n = t.n();
    if t.m() != n - 1 || !t.is_connected() {
        return Err(Error::InvalidInput(format!(
            "triameter_tree needs a tree, got n = {n}, m = {}",
            t.m()
        )));
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    if leaves.len() == 2 {
        let (a, b) = (leaves[0], leaves[1]);
        let from_a = bfs_distances(t, a);
        let mid = (0..n).find(|v| !leaves.contains(v)).expect("n >= 3");
        let mut witness = [a, mid, b];
        witness.sort_unstable();
        return Ok(TriameterResult {
            value: 2 * from_a[b] as u32,
            witness,
        });
    }
    let rows: Vec<Vec<u16>> = leaves.iter().map(|&l| bfs_distances(t, l)).collect();
    let mut best = 0u32;
    let mut witness = [leaves[0], leaves[1], leaves[2]];
    for i in 0..leaves.len() - 2 {
        for j in i + 1..leaves.len() - 1 {
            let dij = rows[i][leaves[j]] as u32;
            for k in j + 1..leaves.len() {
                let sum = dij + rows[i][leaves[k]] as u32 + rows[j][leaves[k]] as u32;
                if sum > best {
                    best = sum;
                    witness = [leaves[i], leaves[j], leaves[k]];
                }
            }
        }
    }
    Ok(TriameterResult { value: best, witness })
}

/// Dispatcher: recognizes trees by edge count before any all-pairs work
/// and hands everything else to the pruned scan.
pub fn triameter(g: &Graph) -> Result<TriameterResult> {
    guard(g)?;
    if !g.is_connected() {
        return Err(disconnected());
    }
    if g.m() == g.n() - 1 {
        triameter_tree(g)
    } else {
        triameter_pruned(g)
    }
}

//! Structural predicates: tree/star/bistar shapes, bipartiteness,
//! Hamiltonicity, vertex transitivity, and strong regularity.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for the Hamiltonian cycle search.
pub const MAX_HAMILTONIAN_ORDER: usize = 18;

/// Hard cap for the exact vertex-transitivity decision.
pub const MAX_TRANSITIVITY_ORDER: usize = 10;

/// Number of degree-1 vertices.
pub fn leaf_count(g: &Graph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}

/// Connected and acyclic.
pub fn is_tree(g: &Graph) -> bool {
    g.m() == g.n() - 1 && g.is_connected()
}

/// A star K_{1,k}: one center adjacent to all other vertices, no other
/// edges. K_2 counts (k = 1); K_1 does not.
pub fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && is_tree(g) && g.degrees().iter().any(|&d| d == n - 1)
}

/// A bistar: two adjacent centers, every other vertex a leaf on one of
/// them. The smallest bistar is the path P_4.
pub fn is_bistar(g: &Graph) -> bool {
    if g.n() < 4 || !is_tree(g) {
        return false;
    }
    let centers: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    centers.len() == 2 && g.has_edge(centers[0], centers[1])
}

/// The cycle C_n as a graph: connected and 2-regular.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.n() >= 3 && g.degrees().iter().all(|&d| d == 2) && g.is_connected()
}

/// Every pair adjacent (true for K_1).
pub fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * (g.n() - 1) / 2
}

/// Two-colorability, decided per component by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether any edge lies in a triangle, via row intersection.
pub fn has_triangle(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        let common = g
            .row(u)
            .iter()
            .zip(g.row(v))
            .any(|(a, b)| a & b != 0);
        if common {
            return true;
        }
    }
    false
}

/// Exact Hamiltonian-cycle existence for `n <= 18`. Graphs on fewer
/// than three vertices have no cycle at all.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_HAMILTONIAN_ORDER {
        return Err(Error::CapExceeded {
            operation: "hamiltonian cycle search",
            n,
            cap: MAX_HAMILTONIAN_ORDER,
        });
    }
    if n < 3 || !g.is_connected() || g.degrees().iter().any(|&d| d < 2) {
        return Ok(false);
    }
    // Depth-first extension of a path anchored at vertex 0.
    fn extend(g: &Graph, current: usize, visited: u64, full: u64) -> bool {
        if visited == full {
            return g.has_edge(current, 0);
        }
        for v in g.neighbors(current) {
            if visited >> v & 1 == 0 && extend(g, v, visited | 1 << v, full) {
                return true;
            }
        }
        false
    }
    let full = (1u64 << n) - 1;
    Ok(extend(g, 0, 1, full))
}

/// Vertex transitivity. Non-regular graphs are decided at any order;
/// regular graphs above the cap come back as `None` (unknown) because
/// the automorphism search is exponential.
pub fn is_vertex_transitive(g: &Graph) -> Option<bool> {
    let n = g.n();
    let degrees = g.degrees();
    if degrees.iter().any(|&d| d != degrees[0]) {
        return Some(false);
    }
    if n > MAX_TRANSITIVITY_ORDER {
        return None;
    }
    // For each target t, look for an automorphism sending 0 to t.
    for t in 1..n {
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[0] = t;
        used[t] = true;
        if !automorphism_extend(g, 1, &mut image, &mut used) {
            return Some(false);
        }
    }
    Some(true)
}

fn automorphism_extend(g: &Graph, depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let n = g.n();
    if depth == n {
        return true;
    }
    'candidates: for t in 0..n {
        if used[t] {
            continue;
        }
        for (w, &iw) in image.iter().enumerate().take(depth) {
            if g.has_edge(depth, w) != g.has_edge(t, iw) {
                continue 'candidates;
            }
        }
        image[depth] = t;
        used[t] = true;
        if automorphism_extend(g, depth + 1, image, used) {
            return true;
        }
        image[depth] = usize::MAX;
        used[t] = false;
    }
    false
}

/// Parameters (n, k, lambda, mu) of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Strong-regularity check by common-neighbor counting: `Some(params)`
/// iff the graph is k-regular with constant lambda over adjacent pairs
/// and constant mu over non-adjacent pairs. Complete and edgeless
/// graphs have no such parameters (one of the pair classes is empty),
/// matching the usual convention.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let degrees = g.degrees();
    let k = degrees[0];
    if degrees.iter().any(|&d| d != k) {
        return None;
    }
    let common = |u: usize, v: usize| -> usize {
        g.row(u)
            .iter()
            .zip(g.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    };
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = common(u, v);
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                Some(_) => {}
            }
        }
    }
    // Both pair classes must be nonempty for the parameters to exist.
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => Some(SrgParams { n, k, lambda, mu }),
        _ => None,
    }
}

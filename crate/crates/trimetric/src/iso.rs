//! Backtracking graph isomorphism for the small, structured graphs this
//! crate compares (grid recognition, test-side deduplication).

use crate::graph::Graph;

/// Exact isomorphism test. Exponential in the worst case, so intended
/// for the small orders the rest of the crate works at; degree pruning
/// makes it fast on everything the sweeps produce.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.m() != b.m() {
        return false;
    }
    let deg_a = a.degrees();
    let deg_b = b.degrees();
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return false;
    }
    // Map vertices of `a` in order of decreasing degree so constrained
    // vertices are placed early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));
    let search = Search { a, b, deg_a, deg_b, order };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search.extend(0, &mut image, &mut used)
}

struct Search<'g> {
    a: &'g Graph,
    b: &'g Graph,
    deg_a: Vec<usize>,
    deg_b: Vec<usize>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&self, depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        'candidates: for t in 0..self.b.n() {
            if used[t] || self.deg_b[t] != self.deg_a[u] {
                continue;
            }
            for &w in &self.order[..depth] {
                if self.a.has_edge(u, w) != self.b.has_edge(t, image[w]) {
                    continue 'candidates;
                }
            }
            image[u] = t;
            used[t] = true;
            if self.extend(depth + 1, image, used) {
                return true;
            }
            image[u] = usize::MAX;
            used[t] = false;
        }
        false
    }
}

//! Exact chromatic number by branch and bound.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap for the exact coloring search.
pub const MAX_CHROMATIC_ORDER: usize = 20;

/// Exact chromatic number for `n <= 20`. A saturation-greedy coloring
/// gives the upper bound, a greedy clique the lower bound, and a
/// backtracking search closes the gap from below.
pub fn chromatic_number(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > MAX_CHROMATIC_ORDER {
        return Err(Error::CapExceeded {
            operation: "chromatic number",
            n,
            cap: MAX_CHROMATIC_ORDER,
        });
    }
    if g.m() == 0 {
        return Ok(1);
    }
    let ub = dsatur_bound(g);
    let lb = clique_bound(g);
    for k in lb..ub {
        if colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(ub)
}

/// Upper bound: color by decreasing saturation (distinct neighbor
/// colors), ties broken by degree then index.
fn dsatur_bound(g: &Graph) -> u32 {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut neighbor_colors: Vec<u64> = vec![0; n];
    let degrees = g.degrees();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (neighbor_colors[v].count_ones(), degrees[v], std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..n)
            .find(|&c| neighbor_colors[v] >> c & 1 == 0)
            .expect("some color among n is free");
        color[v] = c;
        for u in g.neighbors(v) {
            neighbor_colors[u] |= 1 << c;
        }
    }
    color.iter().map(|&c| c as u32 + 1).max().unwrap()
}

/// Lower bound: best greedy clique grown from each start vertex.
fn clique_bound(g: &Graph) -> u32 {
    let n = g.n();
    let degrees = g.degrees();
    let mut best = 1;
    for start in 0..n {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> =
            (0..n).filter(|&v| g.has_edge(start, v)).collect();
        while !candidates.is_empty() {
            let &v = candidates
                .iter()
                .max_by_key(|&&v| (degrees[v], std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            candidates.retain(|&u| g.has_edge(u, v));
        }
        best = best.max(clique.len() as u32);
    }
    best
}

/// Whether a proper k-coloring exists. Vertices are tried in decreasing
/// degree order; a new vertex may only open one fresh color, which kills
/// the color-permutation symmetry.
fn colorable(g: &Graph, k: u32) -> bool {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![u32::MAX; n];
    color_rest(g, &order, 0, k, 0, &mut color)
}

fn color_rest(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: u32,
    max_used: u32,
    color: &mut [u32],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let limit = k.min(max_used + 1);
    'colors: for c in 0..limit {
        for u in g.neighbors(v) {
            if color[u] == c {
                continue 'colors;
            }
        }
        color[v] = c;
        let next_max = max_used.max(c + 1);
        if color_rest(g, order, depth + 1, k, next_max, color) {
            return true;
        }
        color[v] = u32::MAX;
    }
    false
}

//! Shared helpers and independent oracles for the integration tests.
//!
//! Everything here recomputes results from first principles (different
//! algorithms than the library uses) so the tests cross-check rather
//! than echo the implementation.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use trimetric::enumerate::tree_from_pruefer;
use trimetric::metrics::{DistanceMatrix, UNREACHABLE};
use trimetric::Graph;

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of connected labeled graphs on `n` vertices, by the classical
/// inclusion-exclusion recurrence over the component containing vertex 0.
pub fn connected_graph_count(n: usize) -> u64 {
    let pairs = |k: u64| k * (k - 1) / 2;
    let mut c = vec![0u64; n + 1];
    for i in 1..=n as u64 {
        let mut total = 1u64 << pairs(i);
        for k in 1..i {
            total -= binomial(i - 1, k - 1) * c[k as usize] * (1u64 << pairs(i - k));
        }
        c[i as usize] = total;
    }
    c[n]
}

/// Uniform random labeled tree via a random sequence decode.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    match n {
        0 => panic!("trees need at least one vertex"),
        1 => Graph::empty(1).unwrap(),
        2 => Graph::from_edge_list(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(n, &seq)
        }
    }
}

/// Random connected graph: a random spanning tree plus up to `extra`
/// additional edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut g = random_tree(rng, n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Exact girth by edge deletion: the shortest cycle through an edge (u, v)
/// has length d(u, v) + 1 measured in the graph without that edge.
pub fn girth_by_edge_deletion(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    for (u, v) in g.edges() {
        let mut h = g.clone();
        h.remove_edge(u, v).unwrap();
        let d = DistanceMatrix::compute(&h).dist(u, v);
        if d != UNREACHABLE {
            let len = u32::from(d) + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// True when `set` dominates every vertex (closed neighborhoods).
pub fn dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.n()).all(|v| set.contains(&v) || set.iter().any(|&s| g.has_edge(s, v)))
}

/// True when every vertex has a neighbor in `set` (open neighborhoods).
pub fn totally_dominates(g: &Graph, set: &[usize]) -> bool {
    (0..g.n()).all(|v| set.iter().any(|&s| g.has_edge(s, v)))
}

/// True when the subgraph induced by `set` is connected and non-empty.
pub fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![set[0]];
    seen[set[0]] = true;
    while let Some(u) = stack.pop() {
        for &v in set {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    set.iter().all(|&v| seen[v])
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Smallest dominating-set size by raw power-set search.
pub fn brute_domination_number(g: &Graph) -> u32 {
    for k in 1..=g.n() {
        if subsets_of_size(g.n(), k).any(|s| dominates(g, &s)) {
            return k as u32;
        }
    }
    unreachable!("the full vertex set always dominates");
}

/// Smallest connected dominating-set size by raw power-set search.
pub fn brute_connected_domination_number(g: &Graph) -> u32 {
    for k in 1..=g.n() {
        if subsets_of_size(g.n(), k).any(|s| dominates(g, &s) && induces_connected(g, &s)) {
            return k as u32;
        }
    }
    unreachable!("a connected graph dominates itself");
}

/// Smallest total dominating-set size by raw power-set search.
pub fn brute_total_domination_number(g: &Graph) -> u32 {
    for k in 1..=g.n() {
        if subsets_of_size(g.n(), k).any(|s| totally_dominates(g, &s)) {
            return k as u32;
        }
    }
    unreachable!("a graph without isolated vertices totally dominates itself");
}

/// Maximum leaf count over all spanning trees, by checking every
/// (n - 1)-subset of the edge set.
pub fn brute_max_spanning_tree_leaves(g: &Graph) -> u32 {
    let edges = g.edges();
    let n = g.n();
    let mut best = 0;
    let mut pick = vec![0usize; n - 1];
    fn rec(
        edges: &[(usize, usize)],
        n: usize,
        pick: &mut Vec<usize>,
        depth: usize,
        start: usize,
        best: &mut u32,
    ) {
        if depth == n - 1 {
            let chosen: Vec<_> = pick.iter().map(|&i| edges[i]).collect();
            let t = Graph::from_edge_list(n, &chosen).unwrap();
            if t.is_connected() {
                let leaves = (0..n).filter(|&v| t.degree(v) == 1).count() as u32;
                *best = (*best).max(leaves);
            }
            return;
        }
        for i in start..edges.len() {
            pick[depth] = i;
            rec(edges, n, pick, depth + 1, i + 1, best);
        }
    }
    rec(&edges, n, &mut pick, 0, 0, &mut best);
    best
}

/// Asserts that a triameter witness actually attains the claimed value.
pub fn assert_witness_attains(g: &Graph, witness: [usize; 3], value: u32) {
    let dm = DistanceMatrix::compute(g);
    let [u, v, w] = witness;
    let total =
        u32::from(dm.dist(u, v)) + u32::from(dm.dist(v, w)) + u32::from(dm.dist(u, w));
    assert_eq!(total, value, "witness {witness:?} does not attain {value}");
}

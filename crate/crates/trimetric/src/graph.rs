//! Simple undirected graphs on vertex set {0, .., n-1}.
//!
//! Adjacency is stored as one bitset row per vertex, `words = ceil(n/64)`
//! machine words each, so edge tests are O(1) and BFS frontiers can be
//! expanded with word-parallel OR. That is the only representation; it is
//! exact for every order this crate handles and keeps one code path.

use crate::error::{Error, Result};

/// An undirected graph without loops or multi-edges, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major adjacency bits: bit `v` of row `u` lives at
    /// `bits[u * words + v / 64] >> (v % 64)`.
    bits: Vec<u64>,
}

/// Number of unordered vertex pairs of an n-vertex graph.
pub(crate) fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index of pair (i, j), i < j, in column-major order: all pairs with the
/// larger endpoint j come before those with larger endpoint j + 1. This is
/// the bit order of the graph6 format and of enumeration masks.
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "graph must have at least one vertex".into(),
            ));
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, loops, and duplicate edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 11` vertices from a pair-indexed bitmask:
    /// bit `pair_index(i, j)` of `mask` is the edge (i, j). This is the
    /// exhaustive-enumeration encoding.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        if n == 0 || n > 11 {
            return Err(Error::InvalidInput(format!(
                "pair masks cover 1 <= n <= 11, got n = {n}"
            )));
        }
        let pairs = pair_count(n);
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::InvalidInput(format!(
                "mask has bits above pair index {pairs}"
            )));
        }
        let mut g = Graph::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_pair_mask`].
    pub fn pair_mask(&self) -> Result<u64> {
        if self.n > 11 {
            return Err(Error::InvalidInput(format!(
                "pair masks cover n <= 11, got n = {}",
                self.n
            )));
        }
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << pair_index(i, j);
                }
            }
        }
        Ok(mask)
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// The adjacency row of `v` as raw words.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "vertex out of range: ({u}, {v}) with n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Inserts edge (u, v). Errors on loops, range violations, and edges
    /// already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
        }
        self.set_edge(u, v);
        Ok(())
    }

    /// Removes edge (u, v) if present; reports whether it was.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Ok(false);
        }
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
        Ok(true)
    }

    /// O(1) adjacency test. Out-of-range vertices simply test false.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        let row = self.row(v);
        Neighbors {
            row,
            word: 0,
            current: row[0],
        }
    }

    /// All edges (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complement graph: same vertices, exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            words: self.words,
            bits: vec![0; self.bits.len()],
        };
        for v in 0..self.n {
            let base = v * self.words;
            for w in 0..self.words {
                g.bits[base + w] = !self.bits[base + w];
            }
            // Clear the loop bit and the padding above vertex n - 1.
            g.bits[base + v / 64] &= !(1 << (v % 64));
            let tail = self.n % 64;
            if tail != 0 {
                g.bits[base + self.words - 1] &= (1u64 << tail) - 1;
            }
        }
        g
    }

    /// The Cartesian product: vertex (a, b) is index `a * h.n() + b`, and
    /// (a, b) ~ (c, d) iff a = c, b ~ d or b = d, a ~ c.
    pub fn cartesian_product(&self, h: &Graph) -> Result<Graph> {
        let n = self
            .n
            .checked_mul(h.n)
            .filter(|&n| n <= 1 << 20)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "product order {} x {} is too large",
                    self.n, h.n
                ))
            })?;
        let mut g = Graph::empty(n)?;
        for a in 0..self.n {
            for b in 0..h.n {
                let base = a * h.n + b;
                for d in h.neighbors(b) {
                    if d > b {
                        g.set_edge(base, a * h.n + d);
                    }
                }
                for c in self.neighbors(a) {
                    if c > a {
                        g.set_edge(base, c * h.n + b);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Whether every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        let words = self.words;
        let mut visited = vec![0u64; words];
        let mut frontier = vec![0u64; words];
        visited[0] = 1;
        frontier[0] = 1;
        let mut seen = 1usize;
        loop {
            let mut next = vec![0u64; words];
            for v in BitIter::new(&frontier) {
                let row = self.row(v);
                for w in 0..words {
                    next[w] |= row[w];
                }
            }
            let mut grew = false;
            for w in 0..words {
                next[w] &= !visited[w];
                if next[w] != 0 {
                    grew = true;
                    seen += next[w].count_ones() as usize;
                    visited[w] |= next[w];
                }
            }
            if !grew {
                return seen == self.n;
            }
            frontier = next;
        }
    }
}

/// Iterator over the set bits of a word slice (ascending).
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> BitIter<'a> {
        BitIter {
            words,
            word: 0,
            current: words[0],
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word * 64 + bit)
    }
}

/// See [`Graph::neighbors`].
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn rejects_empty_order() {
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::from_edge_list(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edge_list(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edge_list(4, &[(0, 2), (1, 3)]).unwrap();
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert!(!g.has_edge(0, 1) && !g.has_edge(1, 0));
        assert_eq!(g.m(), 2);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn edges_roundtrip() {
        let edges = vec![(0, 1), (0, 4), (2, 3)];
        let g = Graph::from_edge_list(5, &edges).unwrap();
        assert_eq!(g.edges(), edges);
    }

    #[test]
    fn neighbors_cross_word_boundaries() {
        // A path on 70 vertices exercises the two-word rows.
        let g = path(70);
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1]);
        assert_eq!(g.neighbors(69).collect::<Vec<_>>(), vec![68]);
        assert!(g.is_connected());
    }

    #[test]
    fn complement_is_an_involution() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (3, 5)]).unwrap();
        let c = g.complement();
        assert_eq!(c.m(), pair_count(6) - 3);
        assert!(!c.has_edge(0, 1) && c.has_edge(0, 2));
        assert_eq!(c.complement(), g);
        // Same on a two-word graph.
        let p = path(70);
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn cartesian_product_of_two_edges_is_a_four_cycle() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let c4 = k2.cartesian_product(&k2).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.m(), 4);
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert!(!c4.has_edge(0, 3) && !c4.has_edge(1, 2));
    }

    #[test]
    fn connectivity_detects_isolated_parts() {
        assert!(path(5).is_connected());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn pair_mask_roundtrip_matches_edge_order() {
        // Mask bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2).
        let g = Graph::from_pair_mask(3, 0b101).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert_eq!(g.pair_mask().unwrap(), 0b101);
        assert!(Graph::from_pair_mask(3, 0b1000).is_err());
        assert!(Graph::from_pair_mask(12, 0).is_err());
    }

    #[test]
    fn remove_edge_reports_presence() {
        let mut g = path(4);
        assert!(g.remove_edge(1, 2).unwrap());
        assert!(!g.remove_edge(1, 2).unwrap());
        assert!(!g.is_connected());
    }
}

//! Breadth-first distances and the all-pairs distance matrix.

use crate::graph::{BitIter, Graph};

/// Sentinel distance for vertices in another component.
pub const UNREACHABLE: u16 = u16::MAX;

/// Distances from `source` to every vertex, [`UNREACHABLE`] where there
/// is no path. Level-synchronized BFS over bitset frontiers.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<u16> {
    let n = g.n();
    let words = g.words();
    assert!(source < n, "bfs source {source} out of range");
    let mut dist = vec![UNREACHABLE; n];
    dist[source] = 0;
    let mut visited = vec![0u64; words];
    visited[source / 64] |= 1 << (source % 64);
    let mut frontier = visited.clone();
    let mut level = 0u16;
    loop {
        let mut next = vec![0u64; words];
        for v in BitIter::new(&frontier) {
            let row = g.row(v);
            for w in 0..words {
                next[w] |= row[w];
            }
        }
        let mut grew = false;
        for w in 0..words {
            next[w] &= !visited[w];
            if next[w] != 0 {
                grew = true;
                visited[w] |= next[w];
            }
        }
        if !grew {
            return dist;
        }
        level += 1;
        for v in BitIter::new(&next) {
            dist[v] = level;
        }
        frontier = next;
    }
}

/// All-pairs shortest-path distances, stored as a flat n x n table of
/// u16 levels.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    /// Runs one BFS per vertex.
    pub fn compute(g: &Graph) -> DistanceMatrix {
        let n = g.n();
        let mut d = Vec::with_capacity(n * n);
        for v in 0..n {
            d.extend(bfs_distances(g, v));
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// d(u, v), or [`UNREACHABLE`].
    pub fn dist(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    /// The row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Whether every pair is at finite distance.
    pub fn all_finite(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }

    /// Eccentricity of `u`; [`UNREACHABLE`] if some vertex is not
    /// reachable from it.
    pub fn eccentricity(&self, u: usize) -> u16 {
        *self.row(u).iter().max().expect("n >= 1")
    }

    /// All eccentricities.
    pub fn eccentricities(&self) -> Vec<u16> {
        (0..self.n).map(|u| self.eccentricity(u)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn path_distances_are_index_differences() {
        let p6 = FamilySpec::Path { n: 6 }.generate().unwrap();
        let dm = DistanceMatrix::compute(&p6);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(dm.dist(u, v) as i32, (u as i32 - v as i32).abs());
            }
        }
        assert_eq!(dm.eccentricity(0), 5);
        assert_eq!(dm.eccentricity(2), 3);
    }

    #[test]
    fn disconnected_pairs_are_flagged() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert_eq!(dm.dist(0, 1), 1);
        assert_eq!(dm.dist(0, 2), UNREACHABLE);
        assert!(!dm.all_finite());
    }

    #[test]
    fn petersen_has_eccentricity_two_everywhere() {
        let g = FamilySpec::Petersen.generate().unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert!(dm.all_finite());
        assert_eq!(dm.eccentricities(), vec![2; 10]);
    }

    #[test]
    fn bfs_handles_multi_word_graphs() {
        let p70 = FamilySpec::Path { n: 70 }.generate().unwrap();
        let d = bfs_distances(&p70, 0);
        assert_eq!(d[69], 69);
        assert_eq!(d[64], 64);
    }
}

//! Distance-based invariants and structural classification.

pub mod coloring;
pub mod connectivity;
pub mod distance;
pub mod recognition;

pub use coloring::{chromatic_number, MAX_CHROMATIC_ORDER};
pub use connectivity::{vertex_connectivity, MAX_CONNECTIVITY_ORDER};
pub use distance::{bfs_distances, DistanceMatrix, UNREACHABLE};
pub use recognition::{
    has_triangle, is_bipartite, is_bistar, is_complete, is_cycle_graph, is_hamiltonian,
    is_star, is_tree, is_vertex_transitive, leaf_count, srg_parameters, SrgParams,
    MAX_HAMILTONIAN_ORDER, MAX_TRANSITIVITY_ORDER,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Length of a shortest cycle, or `None` for forests. BFS from every
/// root; each non-tree edge (u, v) seen from root r closes a walk of
/// length d(u) + d(v) + 1, and the minimum over roots is exact.
pub fn girth(g: &Graph) -> Option<u32> {
    let n = g.n();
    let mut best: Option<u32> = None;
    for root in 0..n {
        let mut dist = vec![u16::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if v == parent[u] {
                    continue;
                }
                if dist[v] == u16::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else {
                    let cycle = dist[u] as u32 + dist[v] as u32 + 1;
                    best = Some(best.map_or(cycle, |b| b.min(cycle)));
                }
            }
        }
    }
    best
}

/// Sum of all pairwise distances. Undefined for disconnected graphs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let dm = DistanceMatrix::compute(g);
    wiener_from(&dm).ok_or_else(|| Error::Undefined {
        parameter: "wiener index",
        reason: "the graph is disconnected".into(),
    })
}

pub(crate) fn wiener_from(dm: &DistanceMatrix) -> Option<u64> {
    let mut total = 0u64;
    for u in 0..dm.n() {
        for v in u + 1..dm.n() {
            let d = dm.dist(u, v);
            if d == UNREACHABLE {
                return None;
            }
            total += d as u64;
        }
    }
    Some(total)
}

/// One-stop invariant bundle for a connected graph. Capped searches
/// (coloring, connectivity, Hamiltonicity) and the transitivity decision
/// come back as `None` past their caps instead of failing the summary.
#[derive(Debug, Clone, Serialize)]
pub struct MetricsSummary {
    pub n: usize,
    pub m: usize,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices of minimum eccentricity, ascending.
    pub center: Vec<usize>,
    pub eccentricities: Vec<u32>,
    /// `None` means acyclic.
    pub girth: Option<u32>,
    pub wiener: u64,
    pub min_degree: usize,
    pub max_degree: usize,
    pub leaf_count: usize,
    pub is_tree: bool,
    pub is_star: bool,
    pub is_bistar: bool,
    pub is_bipartite: bool,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub has_triangle: bool,
    pub chromatic_number: Option<u32>,
    pub vertex_connectivity: Option<u32>,
    pub is_hamiltonian: Option<bool>,
    pub is_vertex_transitive: Option<bool>,
    pub srg: Option<SrgParams>,
}

/// Computes the whole [`MetricsSummary`]. Errors if `g` is disconnected,
/// since the distance invariants are undefined there.
pub fn metrics_summary(g: &Graph) -> Result<MetricsSummary> {
    let dm = DistanceMatrix::compute(g);
    let wiener = wiener_from(&dm).ok_or_else(|| Error::Undefined {
        parameter: "metrics summary",
        reason: "the graph is disconnected".into(),
    })?;
    let eccentricities: Vec<u32> = dm.eccentricities().iter().map(|&e| e as u32).collect();
    let radius = *eccentricities.iter().min().expect("n >= 1");
    let diameter = *eccentricities.iter().max().expect("n >= 1");
    let center = (0..g.n()).filter(|&v| eccentricities[v] == radius).collect();
    let degrees = g.degrees();
    let uncapped = |r: Result<u32>| -> Result<Option<u32>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::CapExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    Ok(MetricsSummary {
        n: g.n(),
        m: g.m(),
        radius,
        diameter,
        center,
        eccentricities,
        girth: girth(g),
        wiener,
        min_degree: *degrees.iter().min().expect("n >= 1"),
        max_degree: *degrees.iter().max().expect("n >= 1"),
        leaf_count: leaf_count(g),
        is_tree: is_tree(g),
        is_star: is_star(g),
        is_bistar: is_bistar(g),
        is_bipartite: is_bipartite(g),
        is_cycle: is_cycle_graph(g),
        is_complete: is_complete(g),
        has_triangle: has_triangle(g),
        chromatic_number: uncapped(chromatic_number(g))?,
        vertex_connectivity: uncapped(vertex_connectivity(g))?,
        is_hamiltonian: match is_hamiltonian(g) {
            Ok(h) => Some(h),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
        is_vertex_transitive: is_vertex_transitive(g),
        srg: srg_parameters(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn girth_of_known_graphs() {
        assert_eq!(girth(&gen(FamilySpec::Cycle { n: 5 })), Some(5));
        assert_eq!(girth(&gen(FamilySpec::Cycle { n: 9 })), Some(9));
        assert_eq!(girth(&gen(FamilySpec::Petersen)), Some(5));
        assert_eq!(girth(&gen(FamilySpec::Complete { n: 4 })), Some(3));
        assert_eq!(girth(&gen(FamilySpec::Grid { rows: 3, cols: 5 })), Some(4));
        assert_eq!(girth(&gen(FamilySpec::Path { n: 6 })), None);
        assert_eq!(girth(&gen(FamilySpec::Star { leaves: 5 })), None);
        // Disconnected: the cycle component is still found.
        let g = Graph::from_edge_list(6, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn wiener_of_known_graphs() {
        assert_eq!(wiener_index(&gen(FamilySpec::Path { n: 4 })).unwrap(), 10);
        assert_eq!(wiener_index(&gen(FamilySpec::Complete { n: 6 })).unwrap(), 15);
        assert_eq!(wiener_index(&gen(FamilySpec::Cycle { n: 4 })).unwrap(), 8);
        assert_eq!(wiener_index(&gen(FamilySpec::Star { leaves: 3 })).unwrap(), 9);
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(wiener_index(&g).is_err());
    }

    #[test]
    fn summary_of_the_petersen_graph() {
        let s = metrics_summary(&gen(FamilySpec::Petersen)).unwrap();
        assert_eq!((s.n, s.m), (10, 15));
        assert_eq!((s.radius, s.diameter), (2, 2));
        assert_eq!(s.center.len(), 10);
        assert_eq!(s.girth, Some(5));
        assert_eq!(s.chromatic_number, Some(3));
        assert_eq!(s.vertex_connectivity, Some(3));
        assert_eq!(s.is_hamiltonian, Some(false));
        assert_eq!(s.is_vertex_transitive, Some(true));
        assert!(s.srg.is_some());
        assert!(!s.has_triangle && !s.is_bipartite && !s.is_tree);
    }

    #[test]
    fn summary_of_a_bistar() {
        let s = metrics_summary(&gen(FamilySpec::Bistar { n1: 2, n2: 3 })).unwrap();
        assert!(s.is_tree && s.is_bistar && s.is_bipartite && !s.is_star);
        assert_eq!(s.girth, None);
        assert_eq!(s.leaf_count, 5);
        assert_eq!((s.radius, s.diameter), (2, 3));
        assert_eq!(s.center, vec![0, 1]);
    }

    #[test]
    fn summary_rejects_disconnected_graphs() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            metrics_summary(&g),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn summary_handles_the_single_vertex() {
        let s = metrics_summary(&gen(FamilySpec::Path { n: 1 })).unwrap();
        assert_eq!((s.radius, s.diameter, s.wiener), (0, 0, 0));
        assert_eq!(s.chromatic_number, Some(1));
        assert_eq!(s.vertex_connectivity, Some(0));
        assert_eq!(s.is_hamiltonian, Some(false));
    }
}

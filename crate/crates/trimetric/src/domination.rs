//! Exact domination numbers (plain, connected, total) and the maximum
//! leaf count over spanning trees, which is tied to connected domination
//! by max_leaves = n - gamma_c.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::connectivity::mask_connected;

/// Hard cap for the exact domination searches.
pub const MAX_DOMINATION_ORDER: usize = 20;

/// Hard cap for the spanning-tree leaf maximum.
pub const MAX_SPANNING_LEAVES_ORDER: usize = 16;

/// Which closed-neighborhood condition a dominating set must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DominationVariant {
    /// Every vertex is in the set or adjacent to it.
    Plain,
    /// Plain, and the set induces a connected subgraph.
    Connected,
    /// Every vertex (set members included) has a neighbor in the set.
    Total,
}

/// A domination number with its lexicographically first witness set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub size: u32,
    pub witness: Vec<usize>,
}

/// All three domination numbers of a connected graph. `gamma_t` is
/// `None` only for the single-vertex graph, where total domination is
/// impossible.
#[derive(Debug, Clone, Serialize)]
pub struct DominationNumbers {
    pub gamma: DominationResult,
    pub gamma_c: DominationResult,
    pub gamma_t: Option<DominationResult>,
}

/// Computes the requested domination number exactly, `n <= 20`, by
/// trying sizes upward and subsets of each size in lexicographic order.
pub fn domination_number(g: &Graph, variant: DominationVariant) -> Result<DominationResult> {
    let n = g.n();
    if n > MAX_DOMINATION_ORDER {
        return Err(Error::CapExceeded {
            operation: "domination search",
            n,
            cap: MAX_DOMINATION_ORDER,
        });
    }
    match variant {
        DominationVariant::Connected if !g.is_connected() => {
            return Err(Error::Undefined {
                parameter: "connected domination number",
                reason: "the graph is disconnected".into(),
            });
        }
        DominationVariant::Total if (0..n).any(|v| g.degree(v) == 0) => {
            return Err(Error::Undefined {
                parameter: "total domination number",
                reason: "an isolated vertex has no neighbor to dominate it".into(),
            });
        }
        _ => {}
    }
    // Per-vertex coverage masks; single-word rows since n <= 20.
    let cover: Vec<u64> = (0..n)
        .map(|v| {
            let open = g.row(v)[0];
            match variant {
                DominationVariant::Total => open,
                _ => open | 1 << v,
            }
        })
        .collect();
    // suffix[i] = union of cover[i..]; prunes branches whose remaining
    // candidates cannot close the uncovered set.
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] | cover[i];
    }
    let full = (1u64 << n) - 1;
    let connected_required = variant == DominationVariant::Connected;
    for k in 1..=n {
        let mut chosen = Vec::with_capacity(k);
        if pick(g, &cover, &suffix, full, connected_required, k, 0, 0, &mut chosen) {
            return Ok(DominationResult {
                size: k as u32,
                witness: chosen,
            });
        }
    }
    unreachable!("the full vertex set always dominates once preconditions hold")
}

#[allow(clippy::too_many_arguments)]
fn pick(
    g: &Graph,
    cover: &[u64],
    suffix: &[u64],
    full: u64,
    connected_required: bool,
    k: usize,
    start: usize,
    covered: u64,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        if covered != full {
            return false;
        }
        if connected_required {
            let mask = chosen.iter().fold(0u64, |m, &v| m | 1 << v);
            return mask_connected(g, mask);
        }
        return true;
    }
    if covered | suffix[start] != full {
        return false;
    }
    let n = cover.len();
    let slots_left = k - chosen.len();
    for v in start..=n - slots_left {
        chosen.push(v);
        if pick(g, cover, suffix, full, connected_required, k, v + 1, covered | cover[v], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Bundles all three domination numbers of a connected graph.
pub fn domination_numbers(g: &Graph) -> Result<DominationNumbers> {
    if !g.is_connected() {
        return Err(Error::Undefined {
            parameter: "domination numbers",
            reason: "the graph is disconnected".into(),
        });
    }
    Ok(DominationNumbers {
        gamma: domination_number(g, DominationVariant::Plain)?,
        gamma_c: domination_number(g, DominationVariant::Connected)?,
        gamma_t: if g.n() == 1 {
            None
        } else {
            Some(domination_number(g, DominationVariant::Total)?)
        },
    })
}

/// Maximum leaf count over all spanning trees of a connected graph with
/// 3 <= n <= 16, computed as n - gamma_c: the non-leaf vertices of an
/// optimal spanning tree are exactly a minimum connected dominating set.
pub fn spanning_tree_max_leaves(g: &Graph) -> Result<u32> {
    let n = g.n();
    if n > MAX_SPANNING_LEAVES_ORDER {
        return Err(Error::CapExceeded {
            operation: "spanning-tree leaf maximum",
            n,
            cap: MAX_SPANNING_LEAVES_ORDER,
        });
    }
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "spanning-tree leaf maximum needs n >= 3, got {n}"
        )));
    }
    let gamma_c = domination_number(g, DominationVariant::Connected)?;
    Ok(n as u32 - gamma_c.size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    fn dom(spec: FamilySpec, variant: DominationVariant) -> DominationResult {
        domination_number(&spec.generate().unwrap(), variant).unwrap()
    }

    #[test]
    fn path_and_cycle_values() {
        assert_eq!(dom(FamilySpec::Path { n: 6 }, DominationVariant::Plain).size, 2);
        assert_eq!(dom(FamilySpec::Path { n: 6 }, DominationVariant::Connected).size, 4);
        assert_eq!(dom(FamilySpec::Path { n: 6 }, DominationVariant::Total).size, 4);
        assert_eq!(dom(FamilySpec::Cycle { n: 7 }, DominationVariant::Plain).size, 3);
        assert_eq!(dom(FamilySpec::Cycle { n: 7 }, DominationVariant::Connected).size, 5);
        assert_eq!(dom(FamilySpec::Cycle { n: 4 }, DominationVariant::Total).size, 2);
    }

    #[test]
    fn stars_and_complete_graphs() {
        let star = FamilySpec::Star { leaves: 5 };
        assert_eq!(
            dom(star, DominationVariant::Plain),
            DominationResult { size: 1, witness: vec![0] }
        );
        assert_eq!(dom(star, DominationVariant::Total).size, 2);
        let k6 = FamilySpec::Complete { n: 6 };
        assert_eq!(dom(k6, DominationVariant::Plain).size, 1);
        assert_eq!(dom(k6, DominationVariant::Connected).size, 1);
        assert_eq!(dom(k6, DominationVariant::Total).size, 2);
        assert_eq!(dom(FamilySpec::Petersen, DominationVariant::Plain).size, 3);
    }

    #[test]
    fn witnesses_are_lexicographically_first_and_valid() {
        let p6 = gen(FamilySpec::Path { n: 6 });
        let r = domination_number(&p6, DominationVariant::Plain).unwrap();
        assert_eq!(r.witness, vec![1, 4]);
        let rc = domination_number(&p6, DominationVariant::Connected).unwrap();
        assert_eq!(rc.witness, vec![1, 2, 3, 4]);
    }

    #[test]
    fn undefined_variants_error() {
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(domination_number(&split, DominationVariant::Connected).is_err());
        assert_eq!(domination_number(&split, DominationVariant::Plain).unwrap().size, 2);
        let isolated = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(domination_number(&isolated, DominationVariant::Total).is_err());
        let k1 = Graph::empty(1).unwrap();
        assert!(domination_number(&k1, DominationVariant::Total).is_err());
        assert_eq!(domination_number(&k1, DominationVariant::Plain).unwrap().size, 1);
        assert_eq!(domination_number(&k1, DominationVariant::Connected).unwrap().size, 1);
    }

    #[test]
    fn bundle_on_the_single_vertex() {
        let nums = domination_numbers(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(nums.gamma.size, 1);
        assert_eq!(nums.gamma_c.size, 1);
        assert!(nums.gamma_t.is_none());
    }

    #[test]
    fn spanning_leaf_counts() {
        assert_eq!(spanning_tree_max_leaves(&gen(FamilySpec::Complete { n: 4 })).unwrap(), 3);
        assert_eq!(spanning_tree_max_leaves(&gen(FamilySpec::Cycle { n: 5 })).unwrap(), 2);
        assert_eq!(spanning_tree_max_leaves(&gen(FamilySpec::Petersen)).unwrap(), 6);
        assert_eq!(
            spanning_tree_max_leaves(&gen(FamilySpec::Spider { k1: 2, k2: 2, k3: 2 })).unwrap(),
            3
        );
        assert!(spanning_tree_max_leaves(&gen(FamilySpec::Complete { n: 2 })).is_err());
        assert!(spanning_tree_max_leaves(&gen(FamilySpec::Cycle { n: 17 })).is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let big = gen(FamilySpec::Cycle { n: 21 });
        assert!(matches!(
            domination_number(&big, DominationVariant::Plain),
            Err(Error::CapExceeded { cap: 20, .. })
        ));
    }
}

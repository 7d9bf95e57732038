//! Cross-checks between independent algorithms, structural invariants
//! swept over every small graph, and randomized properties.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trimetric::domination::{domination_numbers, spanning_tree_max_leaves};
use trimetric::enumerate::{connected_graphs, labeled_trees};
use trimetric::metrics::{girth, metrics_summary, DistanceMatrix};
use trimetric::triameter::{triameter, triameter_tree};
use trimetric::Graph;

#[test]
fn summary_invariants_hold_on_every_small_graph() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let s = metrics_summary(&g).unwrap();
            assert!(s.radius <= s.diameter && s.diameter <= 2 * s.radius);
            assert!(!s.center.is_empty());
            for &c in &s.center {
                assert_eq!(s.eccentricities[c], s.radius);
            }
            // Odd girth rules out bipartite; the converse only bounds the
            // parity of the girth (the shortest cycle of a non-bipartite
            // graph can still be even).
            if s.girth.is_some_and(|g| g % 2 == 1) {
                assert!(!s.is_bipartite);
            }
            if s.is_bipartite {
                assert!(s.girth.is_none_or(|g| g % 2 == 0));
            }
            assert_eq!(s.girth, common::girth_by_edge_deletion(&g));
            assert_eq!(s.girth.is_none(), s.is_tree);
            let chi = s.chromatic_number.unwrap() as usize;
            assert!(chi <= s.max_degree + 1, "greedy bound broken");
            assert_eq!(chi <= 2, s.is_bipartite);
            assert!(s.vertex_connectivity.unwrap() as usize <= s.min_degree);
            if let Some(p) = s.srg {
                // The standard parameter identity.
                assert_eq!(
                    p.k * (p.k - p.lambda - 1),
                    (p.n - p.k - 1) * p.mu,
                    "srg identity broken for {p:?}"
                );
            }
        }
    }
}

#[test]
fn triameter_brackets_the_diameter() {
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            let s = metrics_summary(&g).unwrap();
            let t = triameter(&g).unwrap();
            assert!(t.value >= 2 * s.diameter, "tr < 2*diam on n={n}");
            assert!(t.value <= 3 * s.diameter, "tr > 3*diam on n={n}");
            let [u, v, w] = t.witness;
            assert!(u < v && v < w, "witness not sorted");
            common::assert_witness_attains(&g, t.witness, t.value);
        }
    }
}

#[test]
fn domination_numbers_match_brute_force() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let d = domination_numbers(&g).unwrap();
            assert_eq!(d.gamma.size, common::brute_domination_number(&g));
            assert_eq!(d.gamma_c.size, common::brute_connected_domination_number(&g));
            let dt = d.gamma_t.as_ref().unwrap();
            assert_eq!(dt.size, common::brute_total_domination_number(&g));

            assert!(common::dominates(&g, &d.gamma.witness));
            assert!(common::dominates(&g, &d.gamma_c.witness));
            assert!(common::induces_connected(&g, &d.gamma_c.witness));
            assert!(common::totally_dominates(&g, &dt.witness));

            assert!(d.gamma.size <= d.gamma_c.size);
            assert!(d.gamma_c.size <= 3 * d.gamma.size - 2);
            assert!(d.gamma.size <= dt.size && dt.size <= 2 * d.gamma.size);
        }
    }
}

#[test]
fn spanning_tree_leaves_match_direct_enumeration() {
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            assert_eq!(
                spanning_tree_max_leaves(&g).unwrap(),
                common::brute_max_spanning_tree_leaves(&g),
                "max-leaf spanning tree mismatch on n={n}"
            );
        }
    }
}

#[test]
fn tree_invariants_hold_on_every_small_tree() {
    for n in 3..=7 {
        for t in labeled_trees(n).unwrap() {
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
            assert!(girth(&t).is_none());
            let leaves = (0..n).filter(|&v| t.degree(v) == 1).count();
            assert!(leaves >= 2, "a tree has at least two leaves");
            let tr = triameter_tree(&t).unwrap();
            // Paths are exactly the two-leaf trees and maximize the triameter.
            assert_eq!(tr.value == 2 * (n as u32 - 1), leaves <= 3);
            assert!(tr.value <= 2 * (n as u32 - 1));
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut g = Graph::empty(n).unwrap();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[idx] {
                        g.add_edge(i, j).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, any::<u64>(), 0..12usize).prop_map(|(n, seed, extra)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_connected_graph(&mut rng, n, extra)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let s = trimetric::graph6::to_graph6(&g).unwrap();
        prop_assert_eq!(trimetric::graph6::parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        let pairs = g.n() * (g.n() - 1) / 2;
        prop_assert_eq!(g.m() + g.complement().m(), pairs);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn cartesian_products_add_distances(a in arb_connected(6), b in arb_connected(6)) {
        let p = a.cartesian_product(&b).unwrap();
        let (da, db, dp) = (
            DistanceMatrix::compute(&a),
            DistanceMatrix::compute(&b),
            DistanceMatrix::compute(&p),
        );
        for u1 in 0..a.n() {
            for u2 in 0..b.n() {
                for v1 in 0..a.n() {
                    for v2 in 0..b.n() {
                        let lhs = dp.dist(u1 * b.n() + u2, v1 * b.n() + v2);
                        let rhs = da.dist(u1, v1) + db.dist(u2, v2);
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn adding_an_edge_never_raises_the_triameter(g in arb_connected(10)) {
        let before = triameter(&g).unwrap().value;
        let mut h = g.clone();
        'outer: for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !h.has_edge(u, v) {
                    h.add_edge(u, v).unwrap();
                    break 'outer;
                }
            }
        }
        let after = triameter(&h).unwrap().value;
        prop_assert!(after <= before);
    }
}

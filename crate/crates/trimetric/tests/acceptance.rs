//! Acceptance gate: one test per criterion, each printing a single
//! `ACCEPTANCE Cn PASS/FAIL` line (run with `-- --nocapture` to see them
//! as they complete).

mod common;

use std::panic;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trimetric::enumerate::{connected_graphs, labeled_trees};
use trimetric::families::FamilySpec;
use trimetric::graph6::{parse_graph6, parse_graph6_lines, to_graph6};
use trimetric::report::{render_scan, Format};
use trimetric::theorems::{
    exhaustive_scan, ng_scan, tree_scan, verify_family_formula, TheoremId, ALL_THEOREMS,
};
use trimetric::triameter::{triameter, triameter_naive, triameter_pruned, triameter_tree};
use trimetric::Graph;

fn criterion(name: &str, desc: &str, f: impl FnOnce() + panic::UnwindSafe) {
    match panic::catch_unwind(f) {
        Ok(()) => println!("ACCEPTANCE {name} PASS {desc}"),
        Err(cause) => {
            println!("ACCEPTANCE {name} FAIL {desc}");
            panic::resume_unwind(cause);
        }
    }
}

#[test]
fn c1_closed_form_family_values() {
    criterion("C1", "closed-form triameter values hold across the named families", || {
        for kind in ["path", "cycle", "complete", "star", "spider", "grid", "petersen"] {
            let v = verify_family_formula(kind, 3, 12).unwrap();
            assert_eq!(v.mismatches, 0, "{kind} has formula mismatches");
            assert!(!v.rows.is_empty(), "{kind} produced no rows");
        }
        let pinned: &[(FamilySpec, u32)] = &[
            (FamilySpec::Path { n: 3 }, 4),
            (FamilySpec::Path { n: 7 }, 12),
            (FamilySpec::Cycle { n: 4 }, 4),
            (FamilySpec::Cycle { n: 9 }, 9),
            (FamilySpec::Complete { n: 9 }, 3),
            (FamilySpec::Star { leaves: 3 }, 6),
            (FamilySpec::Star { leaves: 8 }, 6),
            (FamilySpec::Bistar { n1: 3, n2: 4 }, 8),
            (FamilySpec::Spider { k1: 2, k2: 3, k3: 4 }, 18),
            (FamilySpec::Grid { rows: 3, cols: 4 }, 10),
            (FamilySpec::Petersen, 6),
        ];
        for (spec, want) in pinned {
            let g = spec.generate().unwrap();
            assert_eq!(triameter(&g).unwrap().value, *want, "{spec}");
        }
        // Double stars: 8 whenever either side has two or more leaves,
        // and 6 for the path case (1, 1).
        for n1 in 1..=4usize {
            for n2 in n1..=4 {
                let g = FamilySpec::Bistar { n1, n2 }.generate().unwrap();
                let want = if (n1, n2) == (1, 1) { 6 } else { 8 };
                assert_eq!(triameter(&g).unwrap().value, want, "bistar:{n1},{n2}");
            }
        }
    });
}

#[test]
fn c2_graph6_round_trips_and_frozen_vectors() {
    criterion("C2", "graph6 codec matches hand-packed vectors and round-trips", || {
        let k3 = FamilySpec::Complete { n: 3 }.generate().unwrap();
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(3).unwrap()).unwrap(), "B?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        let g5 = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g5).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g5);

        for n in [4, 5] {
            for g in connected_graphs(n).unwrap() {
                let s = to_graph6(&g).unwrap();
                assert_eq!(parse_graph6(&s).unwrap(), g, "round-trip failed for {s}");
            }
        }

        let parsed = parse_graph6_lines(">>graph6<<\nBw\n\nA_\n").unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0], k3);
        assert_eq!(parsed[1], k2);
        assert!(parse_graph6("B").is_err());
        assert!(parse_graph6("~").is_err());
    });
}

#[test]
fn c3_exhaustive_sweep_orders_4_to_6() {
    criterion("C3", "orders 4-6, all 27 bounds, zero violations", || {
        let summary = exhaustive_scan(&[4, 5, 6], &ALL_THEOREMS, 2).unwrap();
        let expected: u64 = (4..=6).map(common::connected_graph_count).sum();
        assert_eq!(expected, 38 + 728 + 26704);
        assert_eq!(summary.graphs_scanned, expected);
        assert_eq!(summary.total_violations(), 0);
        assert_eq!(summary.results.len(), ALL_THEOREMS.len());
        for r in &summary.results {
            assert_eq!(
                r.holds + r.violated + r.inapplicable + r.inapplicable_cap,
                summary.graphs_scanned,
                "{} counts do not add up",
                r.id
            );
            assert!(r.witnesses.is_empty(), "{} reported witnesses", r.id);
        }
        assert!(summary.elapsed_ms < 180_000, "sweep took too long");
    });
}

#[test]
fn c4_exhaustive_sweep_order_7() {
    criterion("C4", "order 7, distance bounds, zero violations over 1,866,256 graphs", || {
        let ids = [
            TheoremId::T01DiameterBound,
            TheoremId::T03RadiusBound,
            TheoremId::T05OrderEquality,
            TheoremId::T13GirthLower,
            TheoremId::T14GirthEquality,
            TheoremId::T16Wiener,
            TheoremId::T19BipartiteParity,
            TheoremId::T26NgAdditive,
            TheoremId::T27NgMultiplicative,
        ];
        let summary = exhaustive_scan(&[7], &ids, 2).unwrap();
        assert_eq!(summary.graphs_scanned, 1_866_256);
        assert_eq!(summary.graphs_scanned, common::connected_graph_count(7));
        assert_eq!(summary.total_violations(), 0);
        let row = |id: TheoremId| summary.results.iter().find(|r| r.id == id).unwrap();
        // Acyclic (girth-free) cases are exactly the 7^5 labeled trees.
        assert_eq!(row(TheoremId::T13GirthLower).inapplicable, 16_807);
        // The additive and multiplicative complement bounds skip the same
        // disconnected complements; the extra skips are family members.
        let extra = row(TheoremId::T27NgMultiplicative).inapplicable
            - row(TheoremId::T26NgAdditive).inapplicable;
        assert_eq!(extra, 525_000);
        assert!(summary.elapsed_ms < 300_000, "sweep took too long");
    });
}

#[test]
fn c5_tree_sweep_orders_3_to_8() {
    criterion("C5", "labeled trees orders 3-8, tree bounds, zero violations", || {
        let ids = [
            TheoremId::T04TreeRadiusBound,
            TheoremId::T05OrderEquality,
            TheoremId::T06TreeLeafBound,
            TheoremId::T07FourLeaves,
            TheoremId::T15TreeLeafLower,
            TheoremId::T19BipartiteParity,
            TheoremId::T20TreeComplement,
        ];
        let summary = tree_scan(&[3, 4, 5, 6, 7, 8], &ids, 2).unwrap();
        let expected: u64 = [3u64, 16, 125, 1296, 16807, 262144].iter().sum();
        assert_eq!(expected, 280_391);
        assert_eq!(summary.graphs_scanned, expected);
        assert_eq!(summary.total_violations(), 0);
        for r in &summary.results {
            assert_eq!(
                r.holds + r.violated + r.inapplicable + r.inapplicable_cap,
                expected
            );
        }
        // Every tree here is within the radius-bound hypothesis.
        let t04 = summary.results.iter().find(|r| r.id == TheoremId::T04TreeRadiusBound);
        assert_eq!(t04.unwrap().holds, expected);
    });
}

#[test]
fn c6_complement_pair_survey() {
    criterion("C6", "complement-pair extremes match the pinned values", || {
        // Point checks, computed directly rather than through the sweep.
        let p4 = FamilySpec::Path { n: 4 }.generate().unwrap();
        assert_eq!(triameter(&p4).unwrap().value, 6);
        assert_eq!(triameter(&p4.complement()).unwrap().value, 6);
        let c5 = FamilySpec::Cycle { n: 5 }.generate().unwrap();
        assert_eq!(triameter(&c5).unwrap().value, 5);
        assert_eq!(triameter(&c5.complement()).unwrap().value, 5);

        for n in 5..=7usize {
            let s = ng_scan(n, 2).unwrap();
            let cap = 12 * (n as u32 - 1);
            assert!(s.extremes.min_sum >= 10, "n={n}");
            assert!(s.extremes.max_sum <= 2 * n as u32 + 4, "n={n}");
            for m in &s.members {
                assert_eq!(m.sum, m.tr + m.tr_complement);
                assert_eq!(m.product, m.tr * m.tr_complement);
                assert_eq!(m.exceeds_multiplicative, m.product > cap);
                assert_eq!((m.diam, m.diam_complement), (3, 3));
                assert!((7..=9).contains(&m.tr) && (7..=9).contains(&m.tr_complement));
            }
            match n {
                5 => {
                    // The five-cycle is self-complementary and minimal.
                    assert_eq!(s.extremes.min_sum, 10);
                    assert_eq!(s.extremes.min_product, 25);
                    // 49 > 48: the exceptional family genuinely beats the cap.
                    assert_eq!(s.extremes.max_product, 49);
                    assert!(s.members.iter().any(|m| m.exceeds_multiplicative));
                    assert_eq!(s.members.len(), 60);
                }
                6 => {
                    assert_eq!(s.extremes.max_product, 64);
                    assert_eq!(s.both_connected, 20_640);
                    assert_eq!(s.members.len(), 6_120);
                }
                7 => {
                    // From order 7 on, the generic cap holds for everyone.
                    assert!(s.extremes.max_product <= cap);
                    assert!(s.members.iter().all(|m| !m.exceeds_multiplicative));
                    assert_eq!(s.both_connected, 1_635_360);
                    assert_eq!(s.members.len(), 525_000);
                }
                _ => unreachable!(),
            }
        }

        // Cross-check the member counts against the sweep's bookkeeping:
        // the multiplicative check skips disconnected complements plus
        // members, the additive check only the former.
        for (n, members) in [(5usize, 60u64), (6, 6_120)] {
            let s = exhaustive_scan(
                &[n],
                &[TheoremId::T26NgAdditive, TheoremId::T27NgMultiplicative],
                2,
            )
            .unwrap();
            let row = |id: TheoremId| s.results.iter().find(|r| r.id == id).unwrap();
            let extra = row(TheoremId::T27NgMultiplicative).inapplicable
                - row(TheoremId::T26NgAdditive).inapplicable;
            assert_eq!(extra, members, "member count mismatch at n={n}");
        }
    });
}

#[test]
fn c7_triameter_algorithms_agree() {
    criterion("C7", "naive, pruned, and tree algorithms agree everywhere tested", || {
        for n in 4..=6 {
            for g in connected_graphs(n).unwrap() {
                let a = triameter_naive(&g).unwrap();
                let b = triameter_pruned(&g).unwrap();
                let c = triameter(&g).unwrap();
                assert_eq!(a.value, b.value);
                assert_eq!(a.value, c.value);
                common::assert_witness_attains(&g, a.witness, a.value);
                common::assert_witness_attains(&g, b.witness, b.value);
                common::assert_witness_attains(&g, c.witness, c.value);
            }
        }
        for n in 3..=7 {
            for t in labeled_trees(n).unwrap() {
                let a = triameter_naive(&t).unwrap();
                let b = triameter_tree(&t).unwrap();
                assert_eq!(a.value, b.value);
                common::assert_witness_attains(&t, b.witness, b.value);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
        for i in 0..200usize {
            let n = 3 + i % 22;
            let g = common::random_connected_graph(&mut rng, n, i % 17);
            let a = triameter_naive(&g).unwrap();
            let b = triameter_pruned(&g).unwrap();
            assert_eq!(a.value, b.value, "disagreement on n={n} i={i}");
            common::assert_witness_attains(&g, a.witness, a.value);
            common::assert_witness_attains(&g, b.witness, b.value);
            if g.m() == g.n() - 1 {
                assert_eq!(triameter_tree(&g).unwrap().value, a.value);
            }
        }
    });
}

#[test]
fn c8_results_are_worker_count_invariant() {
    criterion("C8", "summaries and rendered reports ignore worker count", || {
        let one = exhaustive_scan(&[4, 5], &ALL_THEOREMS, 1).unwrap();
        let three = exhaustive_scan(&[5, 4], &ALL_THEOREMS, 3).unwrap();
        let seven = exhaustive_scan(&[4, 5], &ALL_THEOREMS, 7).unwrap();
        assert!(one.deterministic_eq(&three));
        assert!(one.deterministic_eq(&seven));

        let mut a = one.clone();
        let mut b = three.clone();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(render_scan(&a, Format::Json), render_scan(&b, Format::Json));
        assert_eq!(render_scan(&a, Format::Csv), render_scan(&b, Format::Csv));
        assert_eq!(render_scan(&a, Format::Text), render_scan(&b, Format::Text));

        let n1 = ng_scan(5, 1).unwrap();
        let n4 = ng_scan(5, 4).unwrap();
        assert!(n1.deterministic_eq(&n4));

        let t1 = tree_scan(
            &[3, 4, 5, 6],
            &[TheoremId::T04TreeRadiusBound, TheoremId::T05OrderEquality, TheoremId::T20TreeComplement],
            1,
        )
        .unwrap();
        // Same request with orders shuffled, ids duplicated and reordered.
        let t5 = tree_scan(
            &[6, 3, 4, 5],
            &[
                TheoremId::T20TreeComplement,
                TheoremId::T04TreeRadiusBound,
                TheoremId::T05OrderEquality,
                TheoremId::T04TreeRadiusBound,
            ],
            5,
        )
        .unwrap();
        assert!(t1.deterministic_eq(&t5));
    });
}

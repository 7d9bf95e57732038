//! The three triameter algorithms side by side: the cubic scan over all
//! triples, the eccentricity-pruned search, and the leaf-only tree search.

use std::time::Instant;

use trimetric::families::FamilySpec;
use trimetric::triameter::{triameter_naive, triameter_pruned, triameter_tree};

fn main() {
    let cases = [
        FamilySpec::Path { n: 40 },
        FamilySpec::Cycle { n: 41 },
        FamilySpec::Grid { rows: 7, cols: 9 },
        FamilySpec::Spider { k1: 10, k2: 12, k3: 15 },
        FamilySpec::Petersen,
    ];
    for spec in cases {
        let g = spec.generate().expect("valid family parameters");
        let start = Instant::now();
        let naive = triameter_naive(&g).expect("connected");
        let naive_us = start.elapsed().as_micros();
        let start = Instant::now();
        let pruned = triameter_pruned(&g).expect("connected");
        let pruned_us = start.elapsed().as_micros();
        assert_eq!(naive.value, pruned.value);
        print!(
            "{:<16} n={:<3} tr={:<3} witness={:?} naive={naive_us}us pruned={pruned_us}us",
            spec.to_string(),
            g.n(),
            naive.value,
            pruned.witness,
        );
        if g.m() == g.n() - 1 {
            let tree = triameter_tree(&g).expect("tree");
            assert_eq!(tree.value, naive.value);
            print!(" tree-path=ok");
        }
        println!();
    }
}

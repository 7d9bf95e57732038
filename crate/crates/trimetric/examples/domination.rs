//! Domination numbers and their witnesses, plus the max-leaf spanning
//! tree count they determine.

use trimetric::domination::{domination_numbers, spanning_tree_max_leaves};
use trimetric::families::FamilySpec;

fn main() {
    for spec in [
        FamilySpec::Path { n: 6 },
        FamilySpec::Cycle { n: 7 },
        FamilySpec::Spider { k1: 2, k2: 2, k3: 2 },
        FamilySpec::Petersen,
    ] {
        let g = spec.generate().expect("valid family parameters");
        let d = domination_numbers(&g).expect("small connected graph");
        println!("{spec}");
        println!("  gamma   = {} witness={:?}", d.gamma.size, d.gamma.witness);
        println!("  gamma_c = {} witness={:?}", d.gamma_c.size, d.gamma_c.witness);
        if let Some(t) = &d.gamma_t {
            println!("  gamma_t = {} witness={:?}", t.size, t.witness);
        }
        let leaves = spanning_tree_max_leaves(&g).expect("within cap");
        println!("  best spanning tree has {leaves} leaves (n - gamma_c)");
    }
}

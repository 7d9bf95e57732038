//! Closed-form triameter values checked against the search, family by
//! family.

use trimetric::theorems::verify_family_formula;

fn main() {
    for kind in ["path", "cycle", "complete", "star", "spider", "grid", "petersen"] {
        let v = verify_family_formula(kind, 3, 10).expect("known family kind");
        let status = if v.mismatches == 0 { "ok" } else { "MISMATCH" };
        println!("{kind:<9} rows={:<3} {status}", v.rows.len());
        for row in v.rows.iter().take(4) {
            println!("  {:<14} n={:<3} tr={}", row.spec, row.n, row.computed);
        }
        if v.rows.len() > 4 {
            println!("  ...");
        }
    }
}

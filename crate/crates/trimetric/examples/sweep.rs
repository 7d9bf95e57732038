//! Exhaustive verification of every registered bound over all connected
//! graphs on four and five vertices.

use trimetric::report::{render_scan, Format};
use trimetric::theorems::{exhaustive_scan, ALL_THEOREMS};

fn main() {
    let summary = exhaustive_scan(&[4, 5], &ALL_THEOREMS, 2).expect("orders within cap");
    print!("{}", render_scan(&summary, Format::Text));
    assert_eq!(summary.total_violations(), 0, "a bound failed on a small graph");
}

//! The tree-specific bounds checked over every labeled tree up to seven
//! vertices.

use trimetric::report::{render_scan, Format};
use trimetric::theorems::{tree_scan, TheoremId};

fn main() {
    let ids = [
        TheoremId::T04TreeRadiusBound,
        TheoremId::T05OrderEquality,
        TheoremId::T06TreeLeafBound,
        TheoremId::T07FourLeaves,
        TheoremId::T15TreeLeafLower,
        TheoremId::T20TreeComplement,
    ];
    let summary = tree_scan(&[3, 4, 5, 6, 7], &ids, 2).expect("orders within cap");
    print!("{}", render_scan(&summary, Format::Text));
    assert_eq!(summary.total_violations(), 0, "a tree bound failed");
}

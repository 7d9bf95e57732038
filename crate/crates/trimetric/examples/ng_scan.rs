//! Triameters of complement pairs: extremes of tr(G) + tr(G-bar) and
//! tr(G) * tr(G-bar), and the small graphs that beat the generic
//! multiplicative bound.

use trimetric::report::{render_ng, Format};
use trimetric::theorems::ng_scan;

fn main() {
    for n in [5, 6] {
        let summary = ng_scan(n, 2).expect("order within cap");
        println!("=== order {n} ===");
        println!("pairs with both sides connected: {}", summary.both_connected);
        let e = &summary.extremes;
        println!("sum range     [{}, {}]", e.min_sum, e.max_sum);
        println!("product range [{}, {}]", e.min_product, e.max_product);
        let over: Vec<_> = summary
            .members
            .iter()
            .filter(|m| m.exceeds_multiplicative)
            .collect();
        println!(
            "family members: {} ({} beat the 12(n-1) product bound)",
            summary.members.len(),
            over.len()
        );
        if let Some(m) = over.first() {
            println!(
                "  e.g. {} with tr={} tr_complement={} product={}",
                m.graph6, m.tr, m.tr_complement, m.product
            );
        }
        println!();
    }

    // The same data is available as a structured report.
    let small = ng_scan(5, 1).expect("order within cap");
    let json = render_ng(&small, Format::Json);
    println!("JSON report for order 5 is {} bytes", json.len());
}

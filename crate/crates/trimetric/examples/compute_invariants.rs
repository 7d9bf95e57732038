//! Full invariant report for a couple of graphs, in the same text form
//! the CLI prints.

use trimetric::families::FamilySpec;
use trimetric::report::{compute_report, render_compute, Format};

fn main() {
    for spec in [
        FamilySpec::Petersen,
        FamilySpec::Bistar { n1: 3, n2: 4 },
        FamilySpec::Grid { rows: 3, cols: 4 },
    ] {
        let g = spec.generate().expect("valid family parameters");
        let report = compute_report(&g, &spec.to_string()).expect("connected graph");
        print!("{}", render_compute(&report, Format::Text));
        println!();
    }
}

//! Runs the antipodal-pair construction for a range of `n` and reports which
//! sizes the verifier accepts.

use std::time::Instant;

use thickness::construct::upper_bound_drawing;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    for n in 4..=max {
        let start = Instant::now();
        let r = upper_bound_drawing(n).expect("n >= 4");
        println!(
            "n = {n:2}: {} layers (target {}), {} edges, {} crossings, valid = {}, verified = {} [{:.2?}]",
            r.drawing.layer_count(),
            r.target_layers,
            r.drawing.edges().len(),
            r.report.crossings.len(),
            r.report.is_valid(),
            r.verified,
            start.elapsed()
        );
    }
}

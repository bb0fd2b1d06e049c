//! Ramsey-type upper bounds: Erdős–Szekeres, hypergraph Ramsey numbers, and
//! the two-stage bound on the number of singletons.

use thickness::bounds::{erdos_szekeres_upper, ramsey_upper, separation_pipeline_bound, theorem_color_classes};

fn main() {
    for k in 3..=8 {
        println!("ES({k}) <= {}", erdos_szekeres_upper(k).expect("k >= 3"));
    }
    for (e, l, c) in [(1, 4, 3), (2, 3, 2), (2, 4, 3), (3, 4, 2), (3, 5, 2), (3, 4, 27)] {
        println!("R_{e}({l}; {c}) <= {}", ramsey_upper(e, l, c).expect("valid parameters").describe(60));
    }
    for t in [2, 3, 4, 10] {
        let p = separation_pipeline_bound(t, 6).expect("n1 >= 3");
        println!(
            "t = {t}: {} colour classes, n2 <= {}",
            theorem_color_classes(t).expect("t >= 1"),
            p.n2.describe(60)
        );
    }
}

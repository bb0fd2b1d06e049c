//! Upper bounds on geometric thickness by searching vertex placements, and
//! the exact layer count for one fixed placement.

use thickness::graph::Graph;
use thickness::search::{convex_placement, geometric_thickness_upper_search, min_layers_fixed_placement, PlacementStrategy};

fn main() {
    let k6 = Graph::complete(6);
    let fixed = min_layers_fixed_placement(&k6, &convex_placement(6), 6).expect("valid placement");
    println!("K6 on a circle: {:?} layers, {} crossing pairs", fixed.layers, fixed.conflicts);

    let graphs = [("K5", Graph::complete(5)), ("K3,3", Graph::complete_bipartite(3, 3)), ("cube", Graph::cube()), ("K6", k6)];
    let strategies = [
        ("convex", PlacementStrategy::Convex),
        ("grid", PlacementStrategy::Grid { resolution: 3, budget: 100_000 }),
        ("random", PlacementStrategy::Random { seed: 1, trials: 300 }),
    ];
    for (name, g) in &graphs {
        for (sname, s) in &strategies {
            match geometric_thickness_upper_search(g, s, 6) {
                Ok(r) => println!(
                    "{name:>5} {sname:>6}: {} layers ({} placements, {} valid)",
                    r.layers, r.placements_tried, r.valid_placements
                ),
                Err(e) => println!("{name:>5} {sname:>6}: {e}"),
            }
        }
    }
}

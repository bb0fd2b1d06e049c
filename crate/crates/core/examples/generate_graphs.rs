//! Builds the subset-inclusion graphs G_k(n) for a few sizes and prints their
//! counts, degrees and a JSON sample.

use thickness::drawing::DrawnGraph;
use thickness::format::graph_to_json;
use thickness::incidence::generate_incidence_graph;

fn main() {
    for (k, n) in [(2, 4), (3, 4), (3, 6), (3, 8), (4, 7)] {
        let g = generate_incidence_graph(k, n).expect("valid sizes");
        let degrees = g.degrees();
        println!(
            "G_{k}({n}): {} vertices, {} edges, max degree {}, bipartite = {}",
            g.vertex_count(),
            g.edge_count(),
            degrees.iter().max().unwrap_or(&0),
            g.bipartition().is_some()
        );
    }
    let cube = generate_incidence_graph(3, 4).expect("valid sizes");
    print!("{}", graph_to_json(&DrawnGraph::Incidence(cube)).expect("serializable"));
}

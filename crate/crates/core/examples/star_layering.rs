//! The three-layer decomposition of G_3(n): each tripleton's edges go to
//! three different layers, so every layer is a star forest.

use thickness::construct::{max_kton_degree_per_layer, thickness3_layering};
use thickness::drawing::layer_planarity;
use thickness::graph::Graph;
use thickness::incidence::generate_incidence_graph;

fn main() {
    for n in [4, 6, 8, 10, 12, 16] {
        let g = generate_incidence_graph(3, n).expect("n >= 3");
        let layers = thickness3_layering(n).expect("n >= 3");
        let planar = layer_planarity(&Graph::from(&g), &layers).expect("one layer per edge");
        println!(
            "G_3({n:2}): {:4} edges, tripleton degree per layer {:?}, layers planar {planar:?}",
            g.edge_count(),
            max_kton_degree_per_layer(&g, &layers)
        );
    }
}

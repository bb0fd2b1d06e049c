//! Checks layered drawings exactly: a clean one, one with a same-layer
//! crossing, and one that is not a valid drawing at all.

use thickness::drawing::{validate_drawing, verify_geometric_thickness_witness, LayeredDrawing};
use thickness::geometry::Point;
use thickness::graph::Graph;
use thickness::search::convex_placement;

fn show(name: &str, d: &LayeredDrawing, t: usize) {
    let r = validate_drawing(d);
    println!(
        "{name}: {} layers, valid = {}, same-layer crossings = {:?}, within {t} layers = {}",
        d.layer_count(),
        r.is_valid(),
        r.crossings.iter().map(|c| (c.first, c.second)).collect::<Vec<_>>(),
        verify_geometric_thickness_witness(d, t)
    );
}

fn main() {
    let k4 = Graph::complete(4);
    // edges (0,2) and (1,3) are the diagonals of the convex quadrilateral
    let one_layer = LayeredDrawing::new(k4.clone(), convex_placement(4), vec![0; 6]).expect("well formed");
    show("K4 convex, one layer", &one_layer, 1);
    let split: Vec<usize> = k4.edges().iter().map(|&(a, b)| usize::from((a, b) == (1, 3))).collect();
    let two_layers = LayeredDrawing::new(k4.clone(), convex_placement(4), split).expect("well formed");
    show("K4 convex, diagonal split", &two_layers, 2);

    let star = [(0, 1), (3, 0), (0, 3), (-3, 0)].map(|(x, y)| Point::from_ints(x, y)).to_vec();
    let k4_star = LayeredDrawing::new(k4, star, vec![0; 6]).expect("well formed");
    show("K4 with a centre vertex", &k4_star, 1);

    let collinear = vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(2, 0)];
    let bad = LayeredDrawing::new(Graph::new(3, vec![(0, 2), (0, 1)]).expect("valid edges"), collinear, vec![0, 1]).expect("well formed");
    let r = validate_drawing(&bad);
    println!("path through a vertex: valid = {}, vertex on edge = {:?}", r.is_valid(), r.vertex_on_edge);
}

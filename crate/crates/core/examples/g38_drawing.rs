//! The explicit three-layer straight-line drawing of G_3(8), verified and
//! written to an SVG file.

use thickness::construct::g38_geometric_drawing;
use thickness::drawing::layer_crossings;
use thickness::svg::{render_svg, SvgOptions};

fn main() {
    let d = g38_geometric_drawing();
    let report = layer_crossings(&d).expect("valid drawing");
    println!(
        "{} vertices, {} edges, edges per layer {:?}, same-layer crossings {}",
        d.coords().len(),
        d.edges().len(),
        report.layer_edge_counts,
        report.crossings.len()
    );
    let path = std::env::temp_dir().join("g38.svg");
    std::fs::write(&path, render_svg(&d, &SvgOptions::default())).expect("writable temp dir");
    println!("wrote {}", path.display());
}

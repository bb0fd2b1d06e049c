//! Deterministic SVG 1.1 rendering of layered drawings.
//!
//! Singletons are circles, larger subsets triangles; each layer has its own
//! colour and dash pattern so layers stay distinguishable in greyscale.

use std::fmt::Write as _;

use crate::drawing::{DrawnGraph, LayeredDrawing};

const COLORS: [&str; 8] = ["#1f4e9c", "#c0392b", "#1e8449", "#7d3c98", "#d68910", "#5d6d7e", "#117a65", "#a04000"];
const DASHES: [&str; 4] = ["none", "7,4", "2,3", "9,3,2,3"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Pixels per drawing unit; `None` fits the drawing into 800 pixels.
    pub scale: Option<f64>,
    /// Radial logarithmic warp around the centroid, for drawings whose
    /// points span many orders of magnitude.
    pub warp: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: None, warp: false }
    }
}

fn warp_points(pts: &mut [(f64, f64)]) {
    if pts.is_empty() {
        return;
    }
    let n = pts.len() as f64;
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
    for p in pts.iter_mut() {
        let (dx, dy) = (p.0 - cx, p.1 - cy);
        let r = dx.hypot(dy);
        if r > 0.0 {
            let f = r.ln_1p() / r;
            *p = (dx * f, dy * f);
        } else {
            *p = (0.0, 0.0);
        }
    }
}

pub fn render_svg(d: &LayeredDrawing, opts: &SvgOptions) -> String {
    let mut pts: Vec<(f64, f64)> = d.coords().iter().map(|p| p.to_f64()).collect();
    if opts.warp {
        warp_points(&mut pts);
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if pts.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = opts.scale.unwrap_or(800.0 / span);
    let margin = 24.0;
    let layers = d.layer_count();
    let legend = 18.0 * layers as f64 + 8.0;
    let width = (x1 - x0) * scale + 2.0 * margin;
    let height = (y1 - y0) * scale + 2.0 * margin + legend;
    // screen y grows downward
    let map = |(x, y): (f64, f64)| ((x - x0) * scale + margin, (y1 - y) * scale + margin);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for layer in 0..layers {
        let color = COLORS[layer % COLORS.len()];
        let dash = DASHES[(layer / COLORS.len() + layer) % DASHES.len()];
        let _ = writeln!(
            out,
            r#"<g id="layer{layer}" stroke="{color}" stroke-width="1.2" stroke-dasharray="{dash}" fill="none">"#
        );
        for (e, &(a, b)) in d.edges().iter().enumerate() {
            if d.layers()[e] != layer {
                continue;
            }
            let (ax, ay) = map(pts[a]);
            let (bx, by) = map(pts[b]);
            let _ = writeln!(out, r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#);
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, r#"<g id="vertices" stroke="black" stroke-width="1" fill="white">"#);
    for (v, &p) in pts.iter().enumerate() {
        let (x, y) = map(p);
        let singleton = match d.graph() {
            DrawnGraph::Incidence(g) => g.vertex(v).is_singleton(),
            DrawnGraph::Plain(_) => true,
        };
        if singleton {
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4"/>"#);
        } else {
            let _ = writeln!(
                out,
                r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"/>"#,
                x,
                y - 5.0,
                x - 4.5,
                y + 3.5,
                x + 4.5,
                y + 3.5
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let base = (y1 - y0) * scale + 2.0 * margin;
    for layer in 0..layers {
        let color = COLORS[layer % COLORS.len()];
        let dash = DASHES[(layer / COLORS.len() + layer) % DASHES.len()];
        let y = base + 18.0 * layer as f64;
        let _ = writeln!(
            out,
            r#"<line x1="{margin:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="{color}" stroke-width="1.2" stroke-dasharray="{dash}"/>"#,
            margin + 30.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="12">layer {layer}</text>"#,
            margin + 38.0,
            y + 4.0
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

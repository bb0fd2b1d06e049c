//! Layered straight-line drawings, book layouts and their verifiers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{IntegerFrame, Point, SegmentRelation};
use crate::graph::Graph;
use crate::incidence::{Edge, IncidenceGraph};
use crate::planarity::is_planar;

/// The graph underneath a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawnGraph {
    Incidence(IncidenceGraph),
    Plain(Graph),
}

impl DrawnGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            DrawnGraph::Incidence(g) => g.vertex_count(),
            DrawnGraph::Plain(g) => g.vertex_count(),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        match self {
            DrawnGraph::Incidence(g) => g.edges(),
            DrawnGraph::Plain(g) => g.edges(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn as_incidence(&self) -> Option<&IncidenceGraph> {
        match self {
            DrawnGraph::Incidence(g) => Some(g),
            DrawnGraph::Plain(_) => None,
        }
    }

    pub fn to_graph(&self) -> Graph {
        match self {
            DrawnGraph::Incidence(g) => Graph::from(g),
            DrawnGraph::Plain(g) => g.clone(),
        }
    }
}

impl From<IncidenceGraph> for DrawnGraph {
    fn from(g: IncidenceGraph) -> Self {
        DrawnGraph::Incidence(g)
    }
}

impl From<Graph> for DrawnGraph {
    fn from(g: Graph) -> Self {
        DrawnGraph::Plain(g)
    }
}

/// A straight-line drawing with one layer index per edge.
///
/// The layer count is one more than the largest layer index used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredDrawing {
    graph: DrawnGraph,
    coords: Vec<Point>,
    layers: Vec<usize>,
}

impl LayeredDrawing {
    /// Checks only that every vertex has a point and every edge a layer;
    /// geometric validity is the job of [`validate_drawing`].
    pub fn new(graph: impl Into<DrawnGraph>, coords: Vec<Point>, layers: Vec<usize>) -> Result<Self> {
        let graph = graph.into();
        if coords.len() != graph.vertex_count() {
            return Err(Error::InvalidDrawing(format!(
                "{} coordinates for {} vertices",
                coords.len(),
                graph.vertex_count()
            )));
        }
        if layers.len() != graph.edge_count() {
            return Err(Error::InvalidLayering(format!(
                "{} layer indices for {} edges",
                layers.len(),
                graph.edge_count()
            )));
        }
        Ok(LayeredDrawing { graph, coords, layers })
    }

    pub fn graph(&self) -> &DrawnGraph {
        &self.graph
    }

    pub fn coords(&self) -> &[Point] {
        &self.coords
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn layer_count(&self) -> usize {
        self.layers.iter().max().map_or(0, |&m| m + 1)
    }

    /// Same graph and layers, new points.
    pub fn with_coords(&self, coords: Vec<Point>) -> Result<Self> {
        LayeredDrawing::new(self.graph.clone(), coords, self.layers.clone())
    }

    /// Same vertices and points, new layer assignment.
    pub fn with_layers(&self, layers: Vec<usize>) -> Result<Self> {
        LayeredDrawing::new(self.graph.clone(), self.coords.clone(), layers)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LayerCrossing {
    pub first: usize,
    pub second: usize,
    pub layer: usize,
}

/// Everything wrong with a drawing. Edge and vertex references are indices
/// into the drawn graph; pairs are listed with the smaller index first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub duplicate_points: Vec<(usize, usize)>,
    /// `(vertex, edge)` with the vertex strictly inside the edge segment.
    pub vertex_on_edge: Vec<(usize, usize)>,
    pub overlapping_edges: Vec<(usize, usize)>,
    pub crossings: Vec<LayerCrossing>,
    pub layer_edge_counts: Vec<usize>,
}

impl CrossingReport {
    pub fn is_valid(&self) -> bool {
        self.duplicate_points.is_empty() && self.vertex_on_edge.is_empty() && self.overlapping_edges.is_empty()
    }

    pub fn is_clean(&self) -> bool {
        self.is_valid() && self.crossings.is_empty()
    }
}

fn layer_edge_counts(layers: &[usize]) -> Vec<usize> {
    let count = layers.iter().max().map_or(0, |&m| m + 1);
    let mut counts = vec![0; count];
    for &l in layers {
        counts[l] += 1;
    }
    counts
}

/// Pairwise segment relations of a placement, computed once and shared by the
/// validity check, the crossing report and the conflict graph.
pub(crate) struct PlacementScan {
    pub duplicate_points: Vec<(usize, usize)>,
    pub vertex_on_edge: Vec<(usize, usize)>,
    pub overlapping_edges: Vec<(usize, usize)>,
    pub proper_crossings: Vec<(usize, usize)>,
}

pub(crate) fn scan_placement(edges: &[Edge], coords: &[Point]) -> PlacementScan {
    let frame = IntegerFrame::new(coords);
    let mut scan = PlacementScan {
        duplicate_points: Vec::new(),
        vertex_on_edge: Vec::new(),
        overlapping_edges: Vec::new(),
        proper_crossings: Vec::new(),
    };
    let n = coords.len();
    for i in 0..n {
        for j in i + 1..n {
            if frame.same_point(i, j) {
                scan.duplicate_points.push((i, j));
            }
        }
    }
    for v in 0..n {
        for (e, &(a, b)) in edges.iter().enumerate() {
            if v != a && v != b && frame.in_segment_interior(v, a, b) {
                scan.vertex_on_edge.push((v, e));
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if frame.same_point(a, b) {
            continue;
        }
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if frame.same_point(c, d) {
                continue;
            }
            match frame.relation(a, b, c, d) {
                SegmentRelation::ProperCrossing => scan.proper_crossings.push((i, j)),
                SegmentRelation::Overlapping => scan.overlapping_edges.push((i, j)),
                // a touching endpoint is already listed as a vertex on an edge
                _ => {}
            }
        }
    }
    scan
}

/// Reports duplicate points, vertices inside edges, overlapping edges and all
/// same-layer proper crossings. Never fails: problems are data.
pub fn validate_drawing(d: &LayeredDrawing) -> CrossingReport {
    let scan = scan_placement(d.edges(), d.coords());
    let crossings = scan
        .proper_crossings
        .iter()
        .filter(|&&(i, j)| d.layers[i] == d.layers[j])
        .map(|&(i, j)| LayerCrossing { first: i, second: j, layer: d.layers[i] })
        .collect();
    CrossingReport {
        duplicate_points: scan.duplicate_points,
        vertex_on_edge: scan.vertex_on_edge,
        overlapping_edges: scan.overlapping_edges,
        crossings,
        layer_edge_counts: layer_edge_counts(&d.layers),
    }
}

/// Same-layer proper crossings of a valid drawing.
pub fn layer_crossings(d: &LayeredDrawing) -> Result<CrossingReport> {
    let report = validate_drawing(d);
    if !report.is_valid() {
        return Err(Error::InvalidDrawing(describe_invalid(&report)));
    }
    Ok(report)
}

pub(crate) fn describe_invalid(r: &CrossingReport) -> String {
    let mut parts = Vec::new();
    if let Some(&(a, b)) = r.duplicate_points.first() {
        parts.push(format!("{} duplicate point pair(s), first {a} and {b}", r.duplicate_points.len()));
    }
    if let Some(&(v, e)) = r.vertex_on_edge.first() {
        parts.push(format!("{} vertex-on-edge incidence(s), first vertex {v} in edge {e}", r.vertex_on_edge.len()));
    }
    if let Some(&(e, f)) = r.overlapping_edges.first() {
        parts.push(format!("{} overlapping edge pair(s), first {e} and {f}", r.overlapping_edges.len()));
    }
    parts.join("; ")
}

/// True iff the drawing is valid, uses at most `t` layers and has no
/// same-layer crossing.
pub fn verify_geometric_thickness_witness(d: &LayeredDrawing, t: usize) -> bool {
    d.layer_count() <= t && validate_drawing(d).is_clean()
}

/// A circular vertex order plus a page per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookLayout {
    graph: Graph,
    order: Vec<usize>,
    pages: Vec<usize>,
}

impl BookLayout {
    pub fn new(graph: Graph, order: Vec<usize>, pages: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::InvalidLayering(format!("order lists {} of {n} vertices", order.len())));
        }
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidLayering("order is not a permutation".into()));
            }
        }
        if pages.len() != graph.edge_count() {
            return Err(Error::InvalidLayering(format!(
                "{} pages for {} edges",
                pages.len(),
                graph.edge_count()
            )));
        }
        Ok(BookLayout { graph, order, pages })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn pages(&self) -> &[usize] {
        &self.pages
    }

    pub fn page_count(&self) -> usize {
        self.pages.iter().max().map_or(0, |&m| m + 1)
    }
}

/// Chords `ab` and `cd` interleave in a circular order given by positions.
pub(crate) fn chords_interleave(pos: &[usize], (a, b): Edge, (c, d): Edge) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let (lo, hi) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
    let inside = |v: usize| lo < pos[v] && pos[v] < hi;
    inside(c) != inside(d)
}

/// Same-page pairs of edges whose chords interleave.
pub fn book_crossings(bl: &BookLayout) -> Vec<(usize, usize)> {
    let mut pos = vec![0; bl.order.len()];
    for (i, &v) in bl.order.iter().enumerate() {
        pos[v] = i;
    }
    let edges = bl.graph.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if bl.pages[i] == bl.pages[j] && chords_interleave(&pos, edges[i], edges[j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Planarity of each layer of an abstract layering.
pub fn layer_planarity(g: &Graph, layer_of: &[usize]) -> Result<Vec<bool>> {
    if layer_of.len() != g.edge_count() {
        return Err(Error::InvalidLayering(format!(
            "{} of {} edges have a layer",
            layer_of.len(),
            g.edge_count()
        )));
    }
    let count = layer_of.iter().max().map_or(0, |&m| m + 1);
    Ok((0..count)
        .map(|l| is_planar(&g.edge_subgraph(|e| layer_of[e] == l)))
        .collect())
}

/// True iff the layering uses at most `t` layers, each planar.
pub fn verify_thickness_layering(g: &Graph, layer_of: &[usize], t: usize) -> Result<bool> {
    let planar = layer_planarity(g, layer_of)?;
    Ok(planar.len() <= t && planar.iter().all(|&p| p))
}

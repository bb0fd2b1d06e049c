//! JSON file formats for graphs, drawings, book layouts, abstract layerings
//! and coordinate lists.
//!
//! Graph documents are `{"k", "n", "vertices": [[members]], "edges": [[i, j]]}`
//! for subset-inclusion graphs and `{"vertices": count, "edges": [...]}` for
//! plain graphs. Rationals are written as `"p/q"` strings, or `"p"` when the
//! denominator is one.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::drawing::{BookLayout, DrawnGraph, LayeredDrawing};
use crate::error::{Error, Result};
use crate::geometry::{format_rational, parse_rational, Point};
use crate::graph::Graph;
use crate::incidence::{IncidenceGraph, SubsetVertex};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum VerticesDoc {
    Count(usize),
    Subsets(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    vertices: VerticesDoc,
    edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct DrawingDoc {
    graph: GraphDoc,
    coords: Vec<[String; 2]>,
    layers: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct BookDoc {
    graph: GraphDoc,
    order: Vec<usize>,
    pages: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct LayeringDoc {
    graph: GraphDoc,
    layers: Vec<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum CoordsDoc {
    Bare(Vec<[String; 2]>),
    Wrapped { coords: Vec<[String; 2]> },
}

/// A graph with an explicit layer per edge, not tied to any placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractLayering {
    pub graph: DrawnGraph,
    pub layers: Vec<usize>,
}

fn graph_doc(g: &DrawnGraph) -> GraphDoc {
    let edges = g.edges().iter().map(|&(a, b)| [a, b]).collect();
    match g {
        DrawnGraph::Incidence(ig) => GraphDoc {
            k: Some(ig.k()),
            n: Some(ig.n()),
            vertices: VerticesDoc::Subsets(ig.vertices().iter().map(|v| v.members()).collect()),
            edges,
        },
        DrawnGraph::Plain(pg) => GraphDoc { k: None, n: None, vertices: VerticesDoc::Count(pg.vertex_count()), edges },
    }
}

fn graph_from_doc(doc: GraphDoc) -> Result<DrawnGraph> {
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[a, b]| (a, b)).collect();
    match (doc.k, doc.n, doc.vertices) {
        (Some(k), Some(n), VerticesDoc::Subsets(subsets)) => {
            let vertices = subsets
                .iter()
                .map(|m| SubsetVertex::from_members(m))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Format(e.to_string()))?;
            Ok(DrawnGraph::Incidence(IncidenceGraph::from_parts(k, n, vertices, edges)?))
        }
        (None, None, VerticesDoc::Count(count)) => {
            Ok(DrawnGraph::Plain(Graph::new(count, edges).map_err(|e| Error::Format(e.to_string()))?))
        }
        _ => Err(Error::Format(
            "a graph needs either k, n and a subset list, or a plain vertex count".into(),
        )),
    }
}

fn coords_doc(coords: &[Point]) -> Vec<[String; 2]> {
    coords.iter().map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect()
}

fn coords_from_doc(doc: &[[String; 2]]) -> Result<Vec<Point>> {
    doc.iter()
        .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
        .collect()
}

fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn graph_to_json(g: &DrawnGraph) -> Result<String> {
    to_pretty(&graph_doc(g))
}

pub fn graph_from_json(text: &str) -> Result<DrawnGraph> {
    graph_from_doc(serde_json::from_str(text)?)
}

pub fn drawing_to_json(d: &LayeredDrawing) -> Result<String> {
    to_pretty(&DrawingDoc { graph: graph_doc(d.graph()), coords: coords_doc(d.coords()), layers: d.layers().to_vec() })
}

pub fn drawing_from_json(text: &str) -> Result<LayeredDrawing> {
    let doc: DrawingDoc = serde_json::from_str(text)?;
    let graph = graph_from_doc(doc.graph)?;
    LayeredDrawing::new(graph, coords_from_doc(&doc.coords)?, doc.layers)
}

pub fn book_to_json(b: &BookLayout) -> Result<String> {
    to_pretty(&BookDoc {
        graph: graph_doc(&DrawnGraph::Plain(b.graph().clone())),
        order: b.order().to_vec(),
        pages: b.pages().to_vec(),
    })
}

pub fn book_from_json(text: &str) -> Result<BookLayout> {
    let doc: BookDoc = serde_json::from_str(text)?;
    let graph = graph_from_doc(doc.graph)?.to_graph();
    BookLayout::new(graph, doc.order, doc.pages)
}

pub fn layering_to_json(l: &AbstractLayering) -> Result<String> {
    to_pretty(&LayeringDoc { graph: graph_doc(&l.graph), layers: l.layers.clone() })
}

pub fn layering_from_json(text: &str) -> Result<AbstractLayering> {
    let doc: LayeringDoc = serde_json::from_str(text)?;
    let graph = graph_from_doc(doc.graph)?;
    if doc.layers.len() != graph.edge_count() {
        return Err(Error::InvalidLayering(format!(
            "{} layer indices for {} edges",
            doc.layers.len(),
            graph.edge_count()
        )));
    }
    Ok(AbstractLayering { graph, layers: doc.layers })
}

/// A bare array of `["x", "y"]` pairs, or an object with a `coords` field
/// (so a drawing file also works).
pub fn coords_from_json(text: &str) -> Result<Vec<Point>> {
    match serde_json::from_str(text)? {
        CoordsDoc::Bare(c) | CoordsDoc::Wrapped { coords: c } => coords_from_doc(&c),
    }
}

pub fn coords_to_json(coords: &[Point]) -> Result<String> {
    to_pretty(&coords_doc(coords))
}

fn with_path(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| with_path(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| with_path(path, e))
}

pub fn read_graph(path: &Path) -> Result<DrawnGraph> {
    graph_from_json(&read_text(path)?)
}

pub fn read_drawing(path: &Path) -> Result<LayeredDrawing> {
    drawing_from_json(&read_text(path)?)
}

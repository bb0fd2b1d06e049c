//! Plain simple graphs and a few reference families used throughout the tests.

use crate::error::{Error, Result};
use crate::incidence::{Edge, IncidenceGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a simple graph; loops, repeated edges and out-of-range endpoints
    /// are rejected.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::Format(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Format(format!("loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Format(format!("repeated edge ({a}, {b})")));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// The subgraph on all vertices keeping the edges for which `keep` holds.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let edges = (0..self.edges.len())
            .filter(|&i| keep(i))
            .map(|i| self.edges[i])
            .collect();
        Graph { vertex_count: self.vertex_count, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        }
    }

    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph { vertex_count: n, edges }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph {
            vertex_count: n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    pub fn path(n: usize) -> Graph {
        Graph {
            vertex_count: n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph { vertex_count: a + b, edges }
    }

    /// The 3-cube with vertices as 3-bit strings.
    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in 0..3 {
                let w = v ^ (1 << bit);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        Graph { vertex_count: 8, edges }
    }
}

impl From<&IncidenceGraph> for Graph {
    fn from(g: &IncidenceGraph) -> Self {
        Graph {
            vertex_count: g.vertex_count(),
            edges: g.edges().to_vec(),
        }
    }
}

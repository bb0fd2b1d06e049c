//! Subset-inclusion graphs `G_k(n)`.
//!
//! The vertices of `G_k(n)` are the singletons and the `k`-element subsets of
//! the ground set `{0, .., n-1}`; a singleton `{i}` is adjacent to every
//! `k`-subset containing `i`. `G_3(4)` is the cube.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set; members are stored in a `u64` bit-set.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of the ground set, stored as a bit-set.
///
/// Equality is set equality. The derived order is not the lexicographic order
/// of member lists; use [`SubsetVertex::lex_cmp`] for that.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetVertex(u64);

impl SubsetVertex {
    pub fn singleton(member: usize) -> Self {
        assert!(member < MAX_GROUND_SET, "member {member} out of range");
        SubsetVertex(1 << member)
    }

    pub fn from_members(members: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &m in members {
            if m >= MAX_GROUND_SET {
                return Err(Error::InvalidParameters(format!(
                    "member {m} exceeds the supported ground set size {MAX_GROUND_SET}"
                )));
            }
            if bits & (1 << m) != 0 {
                return Err(Error::Format(format!("repeated member {m}")));
            }
            bits |= 1 << m;
        }
        Ok(SubsetVertex(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_singleton(self) -> bool {
        self.len() == 1
    }

    pub fn contains(self, member: usize) -> bool {
        member < MAX_GROUND_SET && self.0 & (1 << member) != 0
    }

    pub fn is_subset_of(self, other: SubsetVertex) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn members(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut bits = self.0;
        while bits != 0 {
            let m = bits.trailing_zeros() as usize;
            out.push(m);
            bits &= bits - 1;
        }
        out
    }

    /// The single member of a singleton.
    pub fn singleton_member(self) -> Option<usize> {
        self.is_singleton().then(|| self.0.trailing_zeros() as usize)
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members().cmp(&other.members())
    }

    /// Members concatenated as digits when all are below ten (`{0,1,2}` is `012`),
    /// otherwise a brace list.
    pub fn label(self) -> String {
        let members = self.members();
        if members.iter().all(|&m| m < 10) {
            members.iter().map(|m| m.to_string()).collect()
        } else {
            let parts: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        }
    }
}

impl fmt::Debug for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An edge as a pair of vertex indices.
pub type Edge = (usize, usize);

/// The bipartite subset-inclusion graph on singletons and `k`-subsets.
///
/// Graphs produced by [`generate_incidence_graph`] are complete and in
/// canonical order (singletons `0..n` first, then `k`-subsets in lexicographic
/// order). Graphs read from files, or built by
/// [`IncidenceGraph::with_ktons`], may hold only some of the `k`-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    k: usize,
    n: usize,
    vertices: Vec<SubsetVertex>,
    edges: Vec<Edge>,
}

impl IncidenceGraph {
    /// All singletons of `{0..n}` plus the given `k`-subsets, with every
    /// containment edge. The `k`-subsets keep the order given.
    pub fn with_ktons(k: usize, n: usize, ktons: &[SubsetVertex]) -> Result<Self> {
        check_params(k, n)?;
        let mut vertices: Vec<SubsetVertex> = (0..n).map(SubsetVertex::singleton).collect();
        let mut edges = Vec::with_capacity(k * ktons.len());
        for &t in ktons {
            if t.len() != k || t.bits() >> n != 0 {
                return Err(Error::InvalidParameters(format!(
                    "{t} is not a {k}-subset of a {n}-element ground set"
                )));
            }
            if vertices[n..].contains(&t) {
                return Err(Error::InvalidParameters(format!("repeated subset {t}")));
            }
            let idx = vertices.len();
            vertices.push(t);
            for m in t.members() {
                edges.push((m, idx));
            }
        }
        Ok(IncidenceGraph { k, n, vertices, edges })
    }

    /// Builds a graph from explicit vertex and edge lists, checking every
    /// invariant except completeness.
    pub fn from_parts(
        k: usize,
        n: usize,
        vertices: Vec<SubsetVertex>,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        check_params(k, n)?;
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if v.bits() >> n != 0 {
                return Err(Error::Format(format!("vertex {v} has a member >= n = {n}")));
            }
            if v.len() != 1 && v.len() != k {
                return Err(Error::Format(format!("vertex {v} is neither a singleton nor a {k}-subset")));
            }
            if !seen.insert(*v) {
                return Err(Error::Format(format!("repeated vertex {v}")));
            }
        }
        let mut seen_edges = std::collections::HashSet::new();
        for &(a, b) in &edges {
            let (Some(&va), Some(&vb)) = (vertices.get(a), vertices.get(b)) else {
                return Err(Error::Format(format!("edge ({a}, {b}) references a missing vertex")));
            };
            let ok = (va.is_singleton() && va.is_subset_of(vb) && vb.len() == k)
                || (vb.is_singleton() && vb.is_subset_of(va) && va.len() == k);
            if !ok {
                return Err(Error::Format(format!("edge {va}-{vb} is not a containment pair")));
            }
            if !seen_edges.insert((a.min(b), a.max(b))) {
                return Err(Error::Format(format!("repeated edge ({a}, {b})")));
            }
        }
        Ok(IncidenceGraph { k, n, vertices, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[SubsetVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, idx: usize) -> SubsetVertex {
        self.vertices[idx]
    }

    pub fn index_of(&self, v: SubsetVertex) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// Vertex index of the singleton `{member}`.
    pub fn singleton_index(&self, member: usize) -> Option<usize> {
        if member < self.n && self.vertices.get(member) == Some(&SubsetVertex::singleton(member)) {
            return Some(member);
        }
        self.index_of(SubsetVertex::singleton(member))
    }

    /// Indices of the singleton vertices, ordered by member.
    pub fn singleton_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| self.vertices[i].is_singleton())
            .collect();
        idx.sort_by_key(|&i| self.vertices[i].bits());
        idx
    }

    /// Indices of the `k`-subset vertices in canonical (lexicographic) order.
    pub fn kton_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| !self.vertices[i].is_singleton())
            .collect();
        idx.sort_by(|&a, &b| self.vertices[a].lex_cmp(&self.vertices[b]));
        idx
    }

    /// True when every `k`-subset of the ground set is present.
    pub fn is_complete(&self) -> bool {
        binomial(self.n, self.k).map_or(false, |c| self.vertices.len() == self.n + c as usize)
            && self.edges.len() == self.k * (self.vertices.len() - self.n)
    }

    /// The singleton/kton split as a 2-coloring; returns `None` if some edge
    /// joins two vertices of the same class.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let side: Vec<bool> = self.vertices.iter().map(|v| v.is_singleton()).collect();
        self.edges
            .iter()
            .all(|&(a, b)| side[a] != side[b])
            .then_some(side)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The same graph in canonical vertex order, and the map from old vertex
    /// index to new vertex index.
    pub fn canonicalize(&self) -> (IncidenceGraph, Vec<usize>) {
        let mut order: Vec<usize> = self.singleton_indices();
        order.extend(self.kton_indices());
        let mut new_index = vec![0; self.vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let vertices = order.iter().map(|&i| self.vertices[i]).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (new_index[a], new_index[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_by_key(|&(s, t)| (t, s));
        (
            IncidenceGraph { k: self.k, n: self.n, vertices, edges },
            new_index,
        )
    }
}

fn check_params(k: usize, n: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    if n > MAX_GROUND_SET {
        return Err(Error::InvalidParameters(format!(
            "n = {n} exceeds the supported ground set size {MAX_GROUND_SET}"
        )));
    }
    Ok(())
}

/// `C(n, r)` in `u128`, or `None` on overflow.
pub fn binomial(n: usize, r: usize) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// All `k`-subsets of `{0..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<SubsetVertex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        out.push(SubsetVertex::from_members(&comb).expect("members in range"));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if comb[i] < n - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Generates `G_k(n)` in canonical order.
pub fn generate_incidence_graph(k: usize, n: usize) -> Result<IncidenceGraph> {
    check_params(k, n)?;
    let count = binomial(n, k).unwrap_or(u128::MAX);
    if count > 5_000_000 {
        return Err(Error::TooLarge(format!("G_{k}({n}) has {count} {k}-subsets")));
    }
    IncidenceGraph::with_ktons(k, n, &k_subsets(n, k))
}

/// The `k`-subset vertices in canonical order.
pub fn tripletons(g: &IncidenceGraph) -> Vec<SubsetVertex> {
    g.kton_indices().into_iter().map(|i| g.vertex(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(list: &[&[usize]]) -> Vec<SubsetVertex> {
        list.iter().map(|m| SubsetVertex::from_members(m).unwrap()).collect()
    }

    #[test]
    fn cube_counts() {
        let g = generate_incidence_graph(3, 4).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.bipartition().is_some());
        assert!(g.is_complete());
    }

    #[test]
    fn single_tripleton_star() {
        let g = generate_incidence_graph(3, 3).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn doubletons_of_three_form_a_hexagon() {
        let g = generate_incidence_graph(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.degrees().iter().all(|&d| d == 2));
        // connected 2-regular on 6 vertices is the 6-cycle
        let mut seen = vec![false; 6];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            for &(a, b) in g.edges() {
                if a == v { stack.push(b) }
                if b == v { stack.push(a) }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn g35_counts() {
        let g = generate_incidence_graph(3, 5).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 30);
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(generate_incidence_graph(1, 3), Err(Error::InvalidParameters(_))));
        assert!(matches!(generate_incidence_graph(4, 3), Err(Error::InvalidParameters(_))));
        assert!(matches!(generate_incidence_graph(3, 65), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn tripleton_lists() {
        let g = generate_incidence_graph(3, 4).unwrap();
        assert_eq!(
            tripletons(&g),
            subsets(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]])
        );
        assert_eq!(tripletons(&generate_incidence_graph(3, 3).unwrap()), subsets(&[&[0, 1, 2]]));
        assert_eq!(
            tripletons(&generate_incidence_graph(2, 3).unwrap()),
            subsets(&[&[0, 1], &[0, 2], &[1, 2]])
        );
    }

    #[test]
    fn counts_and_degrees_for_all_small_parameters() {
        for n in 2..=9 {
            for k in 2..=n {
                let g = generate_incidence_graph(k, n).unwrap();
                let c = binomial(n, k).unwrap() as usize;
                assert_eq!(g.vertex_count(), n + c);
                assert_eq!(g.edge_count(), k * c);
                let deg = g.degrees();
                let single = binomial(n - 1, k - 1).unwrap() as usize;
                for (i, v) in g.vertices().iter().enumerate() {
                    let want = if v.is_singleton() { single } else { k };
                    assert_eq!(deg[i], want, "G_{k}({n}) vertex {v}");
                }
                assert!(g.bipartition().is_some());
                assert_eq!(g, generate_incidence_graph(k, n).unwrap());
            }
        }
    }

    #[test]
    fn canonicalize_restores_generator_order() {
        let g = generate_incidence_graph(3, 5).unwrap();
        let mut vertices = g.vertices().to_vec();
        vertices.reverse();
        let m = vertices.len();
        let edges = g.edges().iter().map(|&(a, b)| (m - 1 - b, m - 1 - a)).collect();
        let shuffled = IncidenceGraph::from_parts(3, 5, vertices, edges).unwrap();
        let (canon, map) = shuffled.canonicalize();
        assert_eq!(canon, g);
        assert_eq!(map[0], m - 1);
    }

    #[test]
    fn from_parts_rejects_non_containment() {
        let v = subsets(&[&[0], &[1], &[2], &[3], &[0, 1, 2]]);
        let err = IncidenceGraph::from_parts(3, 4, v, vec![(3, 4)]).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }
}

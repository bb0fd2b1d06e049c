//! Classification of drawings of subset-inclusion graphs on singletons and
//! tripletons: clockwise numbering, low/middle/high edge roles, convex and
//! coherent drawings, inner/outer status, tripleton types and crossing
//! characters.
//!
//! The singleton hull stands in for the convex curve through the singletons.
//! Any strictly convex curve through the singletons encloses their hull, so a
//! tripleton strictly inside the hull is inside every such curve; and a curve
//! hugging the hull closely enough leaves every point strictly outside the
//! hull outside the curve. Points on the hull boundary are reported as
//! degenerate rather than guessed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::drawing::{verify_geometric_thickness_witness, LayeredDrawing};
use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, in_strictly_convex_position, point_vs_hull, reflex_gap_order, HullLocation, Point,
    SegmentRelation,
};
use crate::incidence::IncidenceGraph;

fn incidence_of(d: &LayeredDrawing) -> Result<&IncidenceGraph> {
    let g = d
        .graph()
        .as_incidence()
        .ok_or_else(|| Error::Precondition("classification needs a subset-inclusion graph".into()))?;
    if g.k() != 3 {
        return Err(Error::WrongArity { expected: 3, found: g.k() });
    }
    Ok(g)
}

/// Singletons listed clockwise around their hull, and the inverse map from
/// ground-set member to number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonNumbering {
    order: Vec<usize>,
    number: BTreeMap<usize, usize>,
}

impl SingletonNumbering {
    /// Numbers the given members `0, 1, ...` in the order listed.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let mut number = BTreeMap::new();
        for (i, &m) in order.iter().enumerate() {
            if number.insert(m, i).is_some() {
                return Err(Error::InvalidParameters(format!("member {m} numbered twice")));
            }
        }
        Ok(SingletonNumbering { order, number })
    }

    /// Member `i` gets number `i`.
    pub fn identity(n: usize) -> Self {
        SingletonNumbering {
            order: (0..n).collect(),
            number: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn start(&self) -> Option<usize> {
        self.order.first().copied()
    }

    pub fn number_of(&self, member: usize) -> Option<usize> {
        self.number.get(&member).copied()
    }
}

fn singleton_points(g: &IncidenceGraph, d: &LayeredDrawing) -> Vec<(usize, Point)> {
    g.singleton_indices()
        .into_iter()
        .map(|i| (g.vertex(i).singleton_member().unwrap_or(0), d.coords()[i].clone()))
        .collect()
}

fn singletons_strictly_convex(g: &IncidenceGraph, d: &LayeredDrawing) -> bool {
    let pts: Vec<Point> = singleton_points(g, d).into_iter().map(|(_, p)| p).collect();
    in_strictly_convex_position(&pts)
}

/// Singletons in clockwise hull order, beginning with the singleton `{start}`.
pub fn clockwise_numbering(d: &LayeredDrawing, start: usize) -> Result<SingletonNumbering> {
    let g = incidence_of(d)?;
    let singles = singleton_points(g, d);
    if !singles.iter().any(|(m, _)| *m == start) {
        return Err(Error::InvalidParameters(format!("no singleton {{{start}}} in the drawing")));
    }
    let pts: Vec<Point> = singles.iter().map(|(_, p)| p.clone()).collect();
    if !in_strictly_convex_position(&pts) {
        return Err(Error::NotConvexPosition);
    }
    let mut order: Vec<usize> = convex_hull(&pts)
        .iter()
        .rev()
        .map(|h| singles.iter().find(|(_, p)| p == h).map(|(m, _)| *m).unwrap_or(0))
        .collect();
    let at = order.iter().position(|&m| m == start).unwrap_or(0);
    order.rotate_left(at);
    SingletonNumbering::from_order(order)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeRole {
    Low,
    Middle,
    High,
}

impl EdgeRole {
    pub const ALL: [EdgeRole; 3] = [EdgeRole::Low, EdgeRole::Middle, EdgeRole::High];

    pub fn digit(self) -> u8 {
        match self {
            EdgeRole::Low => 0,
            EdgeRole::Middle => 1,
            EdgeRole::High => 2,
        }
    }

    fn index(self) -> usize {
        self.digit() as usize
    }
}

/// `(singleton vertex, tripleton vertex)` of an edge, whichever way it is stored.
fn split_edge(g: &IncidenceGraph, (a, b): (usize, usize)) -> (usize, usize) {
    if g.vertex(a).is_singleton() {
        (a, b)
    } else {
        (b, a)
    }
}

fn number_of_vertex(g: &IncidenceGraph, numbering: &SingletonNumbering, v: usize) -> Result<usize> {
    let member = g.vertex(v).singleton_member().unwrap_or(usize::MAX);
    numbering
        .number_of(member)
        .ok_or_else(|| Error::InvalidParameters(format!("singleton {{{member}}} is not numbered")))
}

/// Role of every edge: within each tripleton the edge to the smallest-numbered
/// singleton is low, to the largest high, to the remaining one middle.
pub fn edge_roles(g: &IncidenceGraph, numbering: &SingletonNumbering) -> Result<Vec<EdgeRole>> {
    if g.k() != 3 {
        return Err(Error::WrongArity { expected: 3, found: g.k() });
    }
    g.edges()
        .iter()
        .map(|&e| {
            let (s, t) = split_edge(g, e);
            let mine = number_of_vertex(g, numbering, s)?;
            let mut smaller = 0;
            for m in g.vertex(t).members() {
                let other = numbering
                    .number_of(m)
                    .ok_or_else(|| Error::InvalidParameters(format!("singleton {{{m}}} is not numbered")))?;
                if other < mine {
                    smaller += 1;
                }
            }
            Ok(EdgeRole::ALL[smaller])
        })
        .collect()
}

/// Edge index of each role at tripleton vertex `t`.
fn role_edges(g: &IncidenceGraph, roles: &[EdgeRole], t: usize) -> Result<[usize; 3]> {
    let mut out = [usize::MAX; 3];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == t || b == t {
            out[roles[e].index()] = e;
        }
    }
    if out.contains(&usize::MAX) {
        return Err(Error::InvalidParameters(format!(
            "tripleton {} does not have all three edges",
            g.vertex(t)
        )));
    }
    Ok(out)
}

/// A valid crossing-free drawing in at most three layers with the singletons
/// in strictly convex position.
pub fn is_convex_drawing(d: &LayeredDrawing) -> bool {
    match incidence_of(d) {
        Ok(g) => singletons_strictly_convex(g, d) && verify_geometric_thickness_witness(d, 3),
        Err(_) => false,
    }
}

/// A convex drawing whose layers are exactly the low, middle and high edge
/// classes under `numbering`, in any order.
pub fn is_coherent(d: &LayeredDrawing, numbering: &SingletonNumbering) -> bool {
    if !is_convex_drawing(d) {
        return false;
    }
    let Ok(g) = incidence_of(d) else { return false };
    let Ok(roles) = edge_roles(g, numbering) else { return false };
    let mut layer_of_role: [Option<usize>; 3] = [None; 3];
    for (e, role) in roles.iter().enumerate() {
        let l = d.layers()[e];
        match layer_of_role[role.index()] {
            None => layer_of_role[role.index()] = Some(l),
            Some(x) if x != l => return false,
            _ => {}
        }
    }
    let used: Vec<usize> = layer_of_role.iter().flatten().copied().collect();
    used.iter().enumerate().all(|(i, l)| !used[i + 1..].contains(l))
}

/// Members at which a clockwise numbering makes the drawing coherent.
pub fn coherent_starts(d: &LayeredDrawing) -> Result<Vec<usize>> {
    let g = incidence_of(d)?;
    let base = clockwise_numbering(d, g.vertex(g.singleton_indices()[0]).singleton_member().unwrap_or(0))?;
    let mut out = Vec::new();
    for &start in base.order() {
        if is_coherent(d, &clockwise_numbering(d, start)?) {
            out.push(start);
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InnerOuter {
    Inner,
    Outer,
    Mixed,
    Degenerate,
}

/// Tripletons against the singleton hull: all strictly inside is inner, all
/// strictly outside is outer, any on the boundary is degenerate. A drawing
/// without tripletons is degenerate too.
pub fn inner_outer(d: &LayeredDrawing) -> Result<InnerOuter> {
    let g = incidence_of(d)?;
    let pts: Vec<Point> = singleton_points(g, d).into_iter().map(|(_, p)| p).collect();
    if !in_strictly_convex_position(&pts) {
        return Err(Error::NotConvexPosition);
    }
    let hull = convex_hull(&pts);
    let (mut inside, mut outside) = (0, 0);
    let ktons = g.kton_indices();
    for &t in &ktons {
        match point_vs_hull(&d.coords()[t], &hull)? {
            HullLocation::Inside => inside += 1,
            HullLocation::Outside => outside += 1,
            HullLocation::Boundary => return Ok(InnerOuter::Degenerate),
        }
    }
    Ok(match (inside, outside) {
        (0, 0) => InnerOuter::Degenerate,
        (_, 0) => InnerOuter::Inner,
        (0, _) => InnerOuter::Outer,
        _ => InnerOuter::Mixed,
    })
}

/// Role digits of a tripleton's edges read clockwise from its reflex gap,
/// with low = 0, middle = 1, high = 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripletonType([u8; 3]);

impl TripletonType {
    pub const ALL: [TripletonType; 6] = [
        TripletonType([0, 1, 2]),
        TripletonType([0, 2, 1]),
        TripletonType([1, 0, 2]),
        TripletonType([1, 2, 0]),
        TripletonType([2, 0, 1]),
        TripletonType([2, 1, 0]),
    ];

    pub fn new(digits: [u8; 3]) -> Result<Self> {
        let mut sorted = digits;
        sorted.sort_unstable();
        if sorted != [0, 1, 2] {
            return Err(Error::InvalidParameters(format!("{digits:?} is not a permutation of 0, 1, 2")));
        }
        Ok(TripletonType(digits))
    }

    pub fn digits(self) -> [u8; 3] {
        self.0
    }

    /// The clockwise position (0, 1 or 2) of the edge with `role`.
    pub fn position_of(self, role: EdgeRole) -> usize {
        self.0.iter().position(|&d| d == role.digit()).unwrap_or(0)
    }
}

impl fmt::Display for TripletonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for TripletonType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidParameters(format!("bad type symbol {s:?}")))?;
        let arr: [u8; 3] = digits
            .try_into()
            .map_err(|_| Error::InvalidParameters(format!("type symbol {s:?} needs three digits")))?;
        TripletonType::new(arr)
    }
}

impl Serialize for TripletonType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Type of tripleton vertex `t`: the clockwise order of its edges, starting
/// after the angle larger than 180 degrees, written as role digits.
pub fn tripleton_type(d: &LayeredDrawing, numbering: &SingletonNumbering, t: usize) -> Result<TripletonType> {
    let g = incidence_of(d)?;
    if t >= g.vertex_count() || g.vertex(t).is_singleton() {
        return Err(Error::InvalidParameters(format!("vertex {t} is not a tripleton")));
    }
    let roles = edge_roles(g, numbering)?;
    type_from_roles(g, d.coords(), &roles, t)
}

pub(crate) fn type_from_roles(
    g: &IncidenceGraph,
    coords: &[Point],
    roles: &[EdgeRole],
    t: usize,
) -> Result<TripletonType> {
    let edges = role_edges(g, roles, t)?;
    let ends: Vec<&Point> = edges.iter().map(|&e| &coords[split_edge(g, g.edges()[e]).0]).collect();
    let order = reflex_gap_order(&coords[t], [ends[0], ends[1], ends[2]]).map_err(|e| {
        Error::DegenerateType(format!("tripleton {}: {e}", g.vertex(t)))
    })?;
    // ends are indexed by role, so the clockwise order is already in role digits
    Ok(TripletonType([order[0] as u8, order[1] as u8, order[2] as u8]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DrawingType {
    Uniform(TripletonType),
    NonUniform,
}

impl fmt::Display for DrawingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingType::Uniform(t) => t.fmt(f),
            DrawingType::NonUniform => f.write_str("NonUniform"),
        }
    }
}

/// The common type of all tripletons, if there is one.
pub fn drawing_type(d: &LayeredDrawing, numbering: &SingletonNumbering) -> Result<DrawingType> {
    let g = incidence_of(d)?;
    let roles = edge_roles(g, numbering)?;
    let mut seen: Option<TripletonType> = None;
    let mut uniform = true;
    for t in g.kton_indices() {
        let ty = type_from_roles(g, d.coords(), &roles, t)?;
        match seen {
            None => seen = Some(ty),
            Some(s) if s != ty => uniform = false,
            _ => {}
        }
    }
    match seen {
        None => Err(Error::Precondition("drawing has no tripletons".into())),
        Some(_) if !uniform => Ok(DrawingType::NonUniform),
        Some(s) => Ok(DrawingType::Uniform(s)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CrossingCharacter {
    Convex,
    Concave,
}

/// For tripletons `abc` and `def` (vertex indices) with `a < d < c < f` in the
/// numbering, in a coherent inner drawing exactly one of two crossings occurs:
/// low of `abc` with high of `def` (convex) or high of `abc` with low of `def`
/// (concave).
pub fn crossing_character(
    d: &LayeredDrawing,
    numbering: &SingletonNumbering,
    abc: usize,
    def: usize,
) -> Result<CrossingCharacter> {
    let g = incidence_of(d)?;
    for t in [abc, def] {
        if t >= g.vertex_count() || g.vertex(t).is_singleton() {
            return Err(Error::InvalidParameters(format!("vertex {t} is not a tripleton")));
        }
    }
    let roles = edge_roles(g, numbering)?;
    let first = role_edges(g, &roles, abc)?;
    let second = role_edges(g, &roles, def)?;
    let num = |e: usize| number_of_vertex(g, numbering, split_edge(g, g.edges()[e]).0);
    let (a, c) = (num(first[0])?, num(first[2])?);
    let (dd, f) = (num(second[0])?, num(second[2])?);
    if !(a < dd && dd < c && c < f) {
        return Err(Error::Precondition(format!(
            "need a < d < c < f, found a = {a}, d = {dd}, c = {c}, f = {f}"
        )));
    }
    if inner_outer(d)? != InnerOuter::Inner || !is_coherent(d, numbering) {
        return Err(Error::Precondition("drawing is not a coherent inner drawing".into()));
    }
    let crosses = |e1: usize, e2: usize| {
        let (p, q) = g.edges()[e1];
        let (r, s) = g.edges()[e2];
        let c = d.coords();
        crate::geometry::relation_of(&c[p], &c[q], &c[r], &c[s]) == SegmentRelation::ProperCrossing
    };
    let convex = crosses(first[0], second[2]);
    let concave = crosses(first[2], second[0]);
    match (convex, concave) {
        (true, false) => Ok(CrossingCharacter::Convex),
        (false, true) => Ok(CrossingCharacter::Concave),
        (true, true) => Err(Error::LemmaViolation("both low-high crossings occur".into())),
        (false, false) => Err(Error::LemmaViolation("neither low-high crossing occurs".into())),
    }
}

/// Everything the classifier can say about a drawing under the clockwise
/// numbering from one start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub start: usize,
    /// Ground-set members in clockwise order.
    pub numbering: Vec<usize>,
    pub convex: bool,
    pub coherent: bool,
    pub coherent_starts: Vec<usize>,
    pub inner_outer: InnerOuter,
    /// Tripleton label to `[low, middle, high]` singleton members.
    pub roles: BTreeMap<String, [usize; 3]>,
    /// Tripleton label to type symbol, or `"NoReflex"`.
    pub types: BTreeMap<String, String>,
    /// Common type symbol, `"NonUniform"`, or `"Undefined"` when some tripleton
    /// has no type.
    pub drawing_type: String,
}

/// Fails only when the singletons are not in strictly convex position or the
/// drawing is not of a graph on singletons and tripletons.
pub fn classify(d: &LayeredDrawing, start: usize) -> Result<ClassificationReport> {
    let g = incidence_of(d)?;
    let numbering = clockwise_numbering(d, start)?;
    let roles = edge_roles(g, &numbering)?;
    let mut role_map = BTreeMap::new();
    let mut types = BTreeMap::new();
    let mut kinds: Vec<Option<TripletonType>> = Vec::new();
    for t in g.kton_indices() {
        let label = g.vertex(t).label();
        let edges = role_edges(g, &roles, t)?;
        let members = edges.map(|e| g.vertex(split_edge(g, g.edges()[e]).0).singleton_member().unwrap_or(0));
        role_map.insert(label.clone(), members);
        let ty = type_from_roles(g, d.coords(), &roles, t).ok();
        types.insert(label, ty.map_or_else(|| "NoReflex".to_string(), |t| t.to_string()));
        kinds.push(ty);
    }
    let drawing_type = if kinds.iter().any(Option::is_none) || kinds.is_empty() {
        "Undefined".to_string()
    } else if kinds.windows(2).all(|w| w[0] == w[1]) {
        kinds[0].map(|t| t.to_string()).unwrap_or_default()
    } else {
        "NonUniform".to_string()
    };
    Ok(ClassificationReport {
        start,
        numbering: numbering.order().to_vec(),
        convex: is_convex_drawing(d),
        coherent: is_coherent(d, &numbering),
        coherent_starts: coherent_starts(d)?,
        inner_outer: inner_outer(d)?,
        roles: role_map,
        types,
        drawing_type,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rational};
    use crate::incidence::{generate_incidence_graph, SubsetVertex};
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn drawing(g: IncidenceGraph, coords: Vec<Point>, roles_as_layers: bool) -> LayeredDrawing {
        let layers = if roles_as_layers {
            edge_roles(&g, &SingletonNumbering::identity(g.n()))
                .unwrap()
                .iter()
                .map(|r| r.index())
                .collect()
        } else {
            vec![0; g.edge_count()]
        };
        LayeredDrawing::new(g, coords, layers).unwrap()
    }

    fn single_tripleton(t: Point) -> LayeredDrawing {
        let g = generate_incidence_graph(3, 3).unwrap();
        drawing(g, vec![p(0, 4), p(4, -2), p(-4, -2), t], true)
    }

    #[test]
    fn numbering_examples() {
        let g = IncidenceGraph::with_ktons(3, 4, &[]).unwrap();
        let sq = LayeredDrawing::new(g, vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)], vec![]).unwrap();
        let num = clockwise_numbering(&sq, 0).unwrap();
        // (0,0), (0,1), (1,1), (1,0)
        assert_eq!(num.order(), &[0, 3, 2, 1]);

        // pentagon listed clockwise from the top
        let g = IncidenceGraph::with_ktons(3, 5, &[]).unwrap();
        let pent = vec![p(0, 10), p(10, 3), p(6, -8), p(-6, -8), p(-10, 3)];
        let d = LayeredDrawing::new(g, pent, vec![]).unwrap();
        assert_eq!(clockwise_numbering(&d, 0).unwrap().order(), &[0, 1, 2, 3, 4]);
        assert_eq!(clockwise_numbering(&d, 3).unwrap().order(), &[3, 4, 0, 1, 2]);

        let g = IncidenceGraph::with_ktons(3, 5, &[]).unwrap();
        let bad = vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2), p(1, 1)];
        let d = LayeredDrawing::new(g, bad, vec![]).unwrap();
        assert!(matches!(clockwise_numbering(&d, 0), Err(Error::NotConvexPosition)));
    }

    #[test]
    fn role_examples() {
        let g = generate_incidence_graph(3, 3).unwrap();
        let roles = edge_roles(&g, &SingletonNumbering::identity(3)).unwrap();
        assert_eq!(roles, vec![EdgeRole::Low, EdgeRole::Middle, EdgeRole::High]);
        let renum = SingletonNumbering::from_order(vec![2, 0, 1]).unwrap();
        let roles = edge_roles(&g, &renum).unwrap();
        // edges go to singletons 0, 1, 2; singleton 2 is numbered first
        assert_eq!(roles, vec![EdgeRole::Middle, EdgeRole::High, EdgeRole::Low]);

        let g4 = generate_incidence_graph(3, 4).unwrap();
        let roles = edge_roles(&g4, &SingletonNumbering::identity(4)).unwrap();
        let mut low_ends: Vec<usize> = g4
            .edges()
            .iter()
            .zip(&roles)
            .filter(|(_, r)| **r == EdgeRole::Low)
            .map(|(&(s, _), _)| s)
            .collect();
        low_ends.sort_unstable();
        assert_eq!(low_ends, vec![0, 0, 0, 1]);

        let g2 = generate_incidence_graph(2, 4).unwrap();
        assert!(matches!(
            edge_roles(&g2, &SingletonNumbering::identity(4)),
            Err(Error::WrongArity { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn role_partition_orders_numbers() {
        for n in 3..8 {
            let g = generate_incidence_graph(3, n).unwrap();
            let num = SingletonNumbering::from_order((0..n).rev().collect()).unwrap();
            let roles = edge_roles(&g, &num).unwrap();
            for t in g.kton_indices() {
                let e = role_edges(&g, &roles, t).unwrap();
                let nums: Vec<usize> = e.iter().map(|&e| num.number_of(g.edges()[e].0).unwrap()).collect();
                assert!(nums[0] < nums[1] && nums[1] < nums[2]);
            }
        }
    }

    #[test]
    fn rotating_the_start_flips_some_role() {
        for n in 4..9 {
            let g = generate_incidence_graph(3, n).unwrap();
            let base = edge_roles(&g, &SingletonNumbering::identity(n)).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            order.rotate_left(1);
            let rotated = edge_roles(&g, &SingletonNumbering::from_order(order).unwrap()).unwrap();
            assert_ne!(base, rotated, "n = {n}");
        }
    }

    #[test]
    fn inner_outer_examples() {
        let d = single_tripleton(p(0, 0));
        assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Inner);
        let d = single_tripleton(p(0, 40));
        assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Outer);
        // (0, -2) lies on the hull edge from (4,-2) to (-4,-2)
        let d = single_tripleton(p(0, -2));
        assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Degenerate);
    }

    #[test]
    fn type_examples() {
        // singletons 0 top, 1 lower right, 2 lower left: clockwise from the top
        let below = single_tripleton(p(0, -20));
        let num = clockwise_numbering(&below, 0).unwrap();
        assert_eq!(num.order(), &[0, 1, 2]);
        // seen from far below, clockwise runs from the lower-left singleton
        // (high) over the top one (low) to the lower-right one (middle)
        let ty = tripleton_type(&below, &num, 3).unwrap();
        assert_eq!(ty.to_string(), "201");
        // renumbering that swaps low and high reverses the roles of 0 and 2
        let swapped = SingletonNumbering::from_order(vec![2, 1, 0]).unwrap();
        assert_eq!(tripleton_type(&below, &swapped, 3).unwrap().to_string(), "021");

        let inside = single_tripleton(p(0, 0));
        assert!(matches!(tripleton_type(&inside, &num, 3), Err(Error::DegenerateType(_))));
        assert!(tripleton_type(&inside, &num, 0).is_err());
    }

    #[test]
    fn all_six_types_occur_around_a_triangle() {
        let mut seen = std::collections::BTreeSet::new();
        for (x, y) in [(0, 40), (30, 20), (30, -20), (0, -40), (-30, -20), (-30, 20)] {
            let d = single_tripleton(p(x, y));
            let num = SingletonNumbering::identity(3);
            seen.insert(tripleton_type(&d, &num, 3).unwrap());
            assert_eq!(drawing_type(&d, &num).unwrap(), DrawingType::Uniform(tripleton_type(&d, &num, 3).unwrap()));
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn type_symbol_parsing() {
        for t in TripletonType::ALL {
            assert_eq!(t.to_string().parse::<TripletonType>().unwrap(), t);
        }
        assert!("011".parse::<TripletonType>().is_err());
        assert!("01".parse::<TripletonType>().is_err());
        assert!("0a2".parse::<TripletonType>().is_err());
    }

    fn cube_coherent() -> LayeredDrawing {
        // singletons on a square, each tripleton at the centroid of its members
        let g = generate_incidence_graph(3, 4).unwrap();
        let coords = vec![p(-12, 12), p(12, 12), p(12, -12), p(-12, -12), p(4, 4), p(-4, 4), p(-4, -4), p(4, -4)];
        drawing(g, coords, true)
    }

    #[test]
    fn coherent_examples() {
        let d = cube_coherent();
        let num = clockwise_numbering(&d, 0).unwrap();
        assert_eq!(num.order(), &[0, 1, 2, 3]);
        assert!(validate_ok(&d));
        assert!(is_convex_drawing(&d));
        assert!(is_coherent(&d, &num));
        // permuted layer names stay coherent
        let permuted = d.with_layers(d.layers().iter().map(|&l| (l + 1) % 3).collect()).unwrap();
        assert!(is_coherent(&permuted, &num));
        // moving two low edges to the middle layer breaks the partition
        let roles = edge_roles(d.graph().as_incidence().unwrap(), &num).unwrap();
        let mut layers = d.layers().to_vec();
        let lows: Vec<usize> = (0..roles.len()).filter(|&e| roles[e] == EdgeRole::Low).take(2).collect();
        for e in lows {
            layers[e] = 1;
        }
        assert!(!is_coherent(&d.with_layers(layers).unwrap(), &num));
        // four layers cannot be a convex drawing
        let mut four = d.layers().to_vec();
        four[0] = 3;
        assert!(!is_convex_drawing(&d.with_layers(four).unwrap()));
    }

    fn validate_ok(d: &LayeredDrawing) -> bool {
        crate::drawing::validate_drawing(d).is_clean()
    }

    #[test]
    fn mixed_types_are_non_uniform() {
        let g = IncidenceGraph::with_ktons(
            3,
            4,
            &[SubsetVertex::from_members(&[0, 1, 2]).unwrap(), SubsetVertex::from_members(&[1, 2, 3]).unwrap()],
        )
        .unwrap();
        let coords = vec![p(-4, 4), p(4, 4), p(4, -4), p(-4, -4), p(0, 30), p(0, -30)];
        let d = drawing(g, coords, true);
        let num = SingletonNumbering::identity(4);
        let a = tripleton_type(&d, &num, 4).unwrap();
        let b = tripleton_type(&d, &num, 5).unwrap();
        assert_ne!(a, b);
        assert_eq!(drawing_type(&d, &num).unwrap(), DrawingType::NonUniform);
    }

    #[test]
    fn crossing_character_precondition() {
        // abc = {0,1,2}, def = {1,2,3}: a = 0, d = 1, c = 2, f = 3 interleave;
        // swapping the roles gives d > c and must be rejected
        let d = cube_coherent();
        let num = clockwise_numbering(&d, 0).unwrap();
        let g = d.graph().as_incidence().unwrap();
        let t012 = g.index_of(SubsetVertex::from_members(&[0, 1, 2]).unwrap()).unwrap();
        let t123 = g.index_of(SubsetVertex::from_members(&[1, 2, 3]).unwrap()).unwrap();
        assert!(matches!(crossing_character(&d, &num, t123, t012), Err(Error::Precondition(_))));
    }

    #[test]
    fn report_fields() {
        let d = cube_coherent();
        let r = classify(&d, 0).unwrap();
        assert!(r.convex && r.coherent);
        assert_eq!(r.inner_outer, InnerOuter::Inner);
        assert_eq!(r.types.len(), 4);
        assert_eq!(r.roles["013"], [0, 1, 3]);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["convex", "coherent", "inner_outer", "types", "drawing_type"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    fn rotate(pt: &Point, c: &Rational2, s: &Rational2) -> Point {
        // rotation by a rational point on the unit circle
        Point::new(&c.0 * &pt.x - &s.0 * &pt.y, &s.0 * &pt.x + &c.0 * &pt.y)
    }

    struct Rational2(crate::geometry::Rational);

    proptest! {
        #[test]
        fn types_invariant_under_similarity(
            tx in -30i64..30, ty in -30i64..30,
            dx in -50i64..50, dy in -50i64..50,
            tt in 0i64..40, scale in 1i64..20,
        ) {
            let d = single_tripleton(p(tx, ty));
            let num = SingletonNumbering::identity(3);
            let Ok(base) = tripleton_type(&d, &num, 3) else { return Ok(()) };
            // cos, sin from the rational parametrization with t = tt/7
            let t = rational(tt, 7);
            let one = int(1);
            let den = &one + &t * &t;
            let c = Rational2((&one - &t * &t) / &den);
            let s = Rational2((int(2) * &t) / &den);
            let k = rational(scale, 3);
            let (ddx, ddy) = (int(dx), int(dy));
            let moved: Vec<Point> = d.coords().iter().map(|q| rotate(q, &c, &s).scale(&k).translate(&ddx, &ddy)).collect();
            let d2 = d.with_coords(moved).unwrap();
            prop_assert_eq!(tripleton_type(&d2, &num, 3).unwrap(), base);
        }

        #[test]
        fn hull_location_decides_inner_outer(
            w in proptest::collection::vec(1i64..30, 3),
            far in 2i64..6, ang in 0usize..6,
        ) {
            let s = [p(0, 8), p(7, -4), p(-7, -4)];
            let total: i64 = w.iter().sum();
            let mut x = int(0);
            let mut y = int(0);
            for (q, &wi) in s.iter().zip(&w) {
                x += &q.x * rational(wi, total);
                y += &q.y * rational(wi, total);
            }
            let d = single_tripleton_on(&s, Point::new(x.clone(), y.clone()));
            prop_assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Inner);
            // push the same point far outside along one of six directions
            let dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (0, -1)];
            let (ux, uy) = dirs[ang];
            let out = Point::new(x + int(ux * far * 10), y + int(uy * far * 10));
            let d = single_tripleton_on(&s, out);
            prop_assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Outer);
        }
    }

    fn single_tripleton_on(s: &[Point; 3], t: Point) -> LayeredDrawing {
        let g = generate_incidence_graph(3, 3).unwrap();
        drawing(g, vec![s[0].clone(), s[1].clone(), s[2].clone(), t], true)
    }
}

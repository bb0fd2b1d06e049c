//! Exact and heuristic searches: per-placement minimum layer counts through
//! conflict-graph colouring, placement search, exact book thickness and the
//! type-constrained search for outer drawings.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    drawing_type, edge_roles, inner_outer, is_coherent, DrawingType, EdgeRole, InnerOuter,
    SingletonNumbering, TripletonType,
};
use crate::construct::coherent_layers_drawing;
use crate::drawing::{
    book_crossings, chords_interleave, scan_placement, verify_geometric_thickness_witness, BookLayout,
    LayeredDrawing,
};
use crate::error::{Error, Result};
use crate::geometry::{
    angle_sum_below_pi, convex_hull, format_rational, in_strictly_convex_position, int, point_vs_hull,
    rational, reflex_gap_order, HullLocation, IntegerFrame, Point, SegmentRelation,
};
use crate::graph::Graph;
use crate::incidence::{k_subsets, Edge, SubsetVertex};
use crate::planarity::is_planar;

/// Edges of a drawn graph as nodes, adjacent when their segments cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn from_edges(nodes: usize, edges: &[Edge]) -> Self {
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in edges {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        ConflictGraph { adj }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (a, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }
}

/// Conflict graph of a valid straight-line placement.
pub fn crossing_conflict_graph(g: &Graph, coords: &[Point]) -> Result<ConflictGraph> {
    if coords.len() != g.vertex_count() {
        return Err(Error::InvalidDrawing(format!(
            "{} coordinates for {} vertices",
            coords.len(),
            g.vertex_count()
        )));
    }
    let scan = scan_placement(g.edges(), coords);
    if !scan.duplicate_points.is_empty() || !scan.vertex_on_edge.is_empty() || !scan.overlapping_edges.is_empty() {
        return Err(Error::InvalidDrawing("placement has coincident points or a vertex inside an edge".into()));
    }
    Ok(ConflictGraph::from_edges(g.edge_count(), &scan.proper_crossings))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chromatic {
    Exact { colors: usize, coloring: Vec<usize> },
    AboveCap,
}

impl Chromatic {
    pub fn colors(&self) -> Option<usize> {
        match self {
            Chromatic::Exact { colors, .. } => Some(*colors),
            Chromatic::AboveCap => None,
        }
    }
}

fn greedy_clique(cg: &ConflictGraph) -> Vec<usize> {
    let n = cg.node_count();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = cg.neighbours(start).to_vec();
        cands.sort_by_key(|&v| std::cmp::Reverse(cg.neighbours(v).len()));
        for v in cands {
            if clique.iter().all(|&u| cg.neighbours(v).binary_search(&u).is_ok()) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct Dsatur<'a> {
    cg: &'a ConflictGraph,
    color: Vec<Option<usize>>,
    /// `seen[v][c]`: neighbours of `v` with colour `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Option<Vec<usize>>,
    limit: usize,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &u in self.cg.neighbours(v) {
            if self.seen[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.seen[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for &u in self.cg.neighbours(v) {
            self.seen[u][c] -= 1;
            if self.seen[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.cg.neighbours(v).len(), std::cmp::Reverse(v)))
    }

    /// Colours everything with fewer than `self.limit` colours if possible.
    fn search(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            self.best = Some(self.color.iter().map(|c| c.unwrap_or(0)).collect());
            self.limit = used;
            return true;
        };
        let top = (used + 1).min(self.limit - 1);
        let mut found = false;
        for c in 0..top {
            if self.seen[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1)) {
                found = true;
            }
            self.unassign(v, c);
            if used.max(c + 1) >= self.limit {
                break;
            }
        }
        found
    }
}

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// clique; `AboveCap` when more than `cap` colours are needed.
pub fn chromatic_number_exact(cg: &ConflictGraph, cap: usize) -> Chromatic {
    let n = cg.node_count();
    if n == 0 {
        return Chromatic::Exact { colors: 0, coloring: Vec::new() };
    }
    let clique = greedy_clique(cg);
    if clique.len() > cap {
        return Chromatic::AboveCap;
    }
    let mut state = Dsatur {
        cg,
        color: vec![None; n],
        seen: vec![vec![0; n + 1]; n],
        saturation: vec![0; n],
        best: None,
        limit: cap + 1,
    };
    // the clique needs distinct colours in any colouring, so fix them
    for (c, &v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    // branch and bound; each complete colouring lowers the limit
    state.search(clique.len());
    match state.best {
        Some(coloring) => {
            let colors = coloring.iter().max().map_or(0, |&m| m + 1);
            Chromatic::Exact { colors, coloring }
        }
        None => Chromatic::AboveCap,
    }
}

#[derive(Clone, Debug)]
pub struct FixedPlacement {
    /// `None` when more than `cap` layers are needed.
    pub layers: Option<usize>,
    pub witness: Option<LayeredDrawing>,
    pub conflicts: usize,
}

/// Minimum number of layers for a fixed placement (at least one), with a
/// witness drawing.
pub fn min_layers_fixed_placement(g: &Graph, coords: &[Point], cap: usize) -> Result<FixedPlacement> {
    let cg = crossing_conflict_graph(g, coords)?;
    let conflicts = cg.edge_count();
    match chromatic_number_exact(&cg, cap.max(1)) {
        Chromatic::AboveCap => Ok(FixedPlacement { layers: None, witness: None, conflicts }),
        Chromatic::Exact { colors, coloring } => {
            let witness = LayeredDrawing::new(g.clone(), coords.to_vec(), coloring)?;
            Ok(FixedPlacement { layers: Some(colors.max(1)), witness: Some(witness), conflicts })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlacementStrategy {
    /// Every injective placement on the `r` by `r` integer grid, in
    /// lexicographic order, up to `budget` placements.
    Grid { resolution: usize, budget: usize },
    /// Local search from perturbed convex position: each trial either
    /// restarts or moves one vertex of the best placement so far.
    Random { seed: u64, trials: usize },
    /// Vertices on a circle.
    Convex,
}

#[derive(Clone, Debug)]
pub struct PlacementSearch {
    pub layers: usize,
    pub drawing: LayeredDrawing,
    pub placements_tried: usize,
    pub valid_placements: usize,
}

/// Points in strictly convex position on a circle of radius 1000.
pub fn convex_placement(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| {
            // rational parametrization of the circle, spread over its upper part
            // and mirrored, so all points are exact and distinct
            let a = std::f64::consts::TAU * i as f64 / n as f64 + 0.1;
            Point::from_ints((1000.0 * a.cos()).round() as i64, (1000.0 * a.sin()).round() as i64)
        })
        .collect()
}

struct Best {
    key: (usize, usize),
    drawing: LayeredDrawing,
}

fn evaluate(g: &Graph, coords: &[Point], cap: usize) -> Option<((usize, usize), LayeredDrawing)> {
    let fixed = min_layers_fixed_placement(g, coords, cap).ok()?;
    Some(((fixed.layers?, fixed.conflicts), fixed.witness?))
}

/// Best verified drawing over the placements generated by `strategy`, using
/// at most `cap` layers. Stops early at the trivial lower bound (2 for
/// nonplanar graphs, 1 otherwise).
pub fn geometric_thickness_upper_search(g: &Graph, strategy: &PlacementStrategy, cap: usize) -> Result<PlacementSearch> {
    let n = g.vertex_count();
    let floor = if is_planar(g) { 1 } else { 2 };
    let mut best: Option<Best> = None;
    let mut tried = 0;
    let mut valid = 0;
    let mut consider = |coords: &[Point], best: &mut Option<Best>| -> bool {
        tried += 1;
        if let Some((key, drawing)) = evaluate(g, coords, cap) {
            valid += 1;
            if best.as_ref().map_or(true, |b| key < b.key) {
                *best = Some(Best { key, drawing });
            }
        }
        best.as_ref().is_some_and(|b| b.key.0 <= floor)
    };
    match *strategy {
        PlacementStrategy::Convex => {
            consider(&convex_placement(n), &mut best);
        }
        PlacementStrategy::Grid { resolution, budget } => {
            let cells: Vec<Point> = (0..resolution as i64)
                .flat_map(|x| (0..resolution as i64).map(move |y| Point::from_ints(x, y)))
                .collect();
            if cells.len() >= n {
                let mut pick = vec![0usize; n];
                let mut used = vec![false; cells.len()];
                let mut count = 0usize;
                grid_enumerate(0, &mut pick, &mut used, &mut |p: &[usize]| {
                    if count >= budget {
                        return true;
                    }
                    count += 1;
                    let coords: Vec<Point> = p.iter().map(|&c| cells[c].clone()).collect();
                    consider(&coords, &mut best)
                });
            }
        }
        PlacementStrategy::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let base = convex_placement(n);
            let adjacency = g.adjacency();
            let fresh = |rng: &mut ChaCha8Rng| -> Vec<Point> {
                base.iter()
                    .map(|p| {
                        let dx = rational(rng.gen_range(-6000..=6000), 10);
                        let dy = rational(rng.gen_range(-6000..=6000), 10);
                        p.translate(&dx, &dy)
                    })
                    .collect()
            };
            let mut current: Option<(Vec<Point>, (usize, usize))> = None;
            for trial in 0..trials {
                let coords = match &current {
                    Some((cur, _)) if trial % 25 != 0 && n > 0 => {
                        let mut c = cur.clone();
                        let v = rng.gen_range(0..n);
                        let nb = &adjacency[v];
                        if !nb.is_empty() && rng.gen_bool(0.5) {
                            // pull toward the neighbours' centroid
                            let k = nb.len() as i64;
                            let (mut sx, mut sy) = (int(0), int(0));
                            for &u in nb {
                                sx += &c[u].x;
                                sy += &c[u].y;
                            }
                            let jx = rational(rng.gen_range(-1000..=1000), 10);
                            let jy = rational(rng.gen_range(-1000..=1000), 10);
                            c[v] = Point::new(sx / int(k) + jx, sy / int(k) + jy);
                        } else {
                            let dx = rational(rng.gen_range(-3000..=3000), 10);
                            let dy = rational(rng.gen_range(-3000..=3000), 10);
                            c[v] = c[v].translate(&dx, &dy);
                        }
                        c
                    }
                    _ => fresh(&mut rng),
                };
                let key = evaluate(g, &coords, cap).map(|(k, _)| k);
                if consider(&coords, &mut best) {
                    break;
                }
                if let Some(k) = key {
                    if current.as_ref().map_or(true, |(_, ck)| k <= *ck) {
                        current = Some((coords, k));
                    }
                }
            }
        }
    }
    let best = best.ok_or(Error::SearchExhausted)?;
    if !verify_geometric_thickness_witness(&best.drawing, best.key.0) {
        return Err(Error::InvalidDrawing("search produced a drawing the verifier rejects".into()));
    }
    Ok(PlacementSearch { layers: best.key.0, drawing: best.drawing, placements_tried: tried, valid_placements: valid })
}

/// Calls `visit` on injective maps from vertices to cells in lexicographic
/// order; `visit` returns true to stop.
fn grid_enumerate(i: usize, pick: &mut Vec<usize>, used: &mut Vec<bool>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if i == pick.len() {
        return visit(pick);
    }
    for c in 0..used.len() {
        if used[c] {
            continue;
        }
        used[c] = true;
        pick[i] = c;
        let stop = grid_enumerate(i + 1, pick, used, visit);
        used[c] = false;
        if stop {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct BookSearch {
    /// `None` when more than `cap` pages are needed.
    pub pages: Option<usize>,
    pub layout: Option<BookLayout>,
    pub orders_examined: usize,
}

/// Default vertex limit for [`book_thickness_exact`].
pub const BOOK_VERTEX_LIMIT: usize = 10;

/// Exact book thickness (at least one page) over all circular orders up to
/// rotation and reflection, with a witness layout.
pub fn book_thickness_exact(g: &Graph, cap: usize, allow_large: bool) -> Result<BookSearch> {
    let n = g.vertex_count();
    if n > BOOK_VERTEX_LIMIT && !allow_large {
        return Err(Error::TooLarge(format!(
            "{n} vertices exceed the book search limit of {BOOK_VERTEX_LIMIT}"
        )));
    }
    let edges = g.edges();
    let mut best: Option<(usize, BookLayout)> = None;
    let mut examined = 0;
    let mut order: Vec<usize> = (0..n).collect();
    let mut try_order = |order: &[usize], best: &mut Option<(usize, BookLayout)>| -> bool {
        examined += 1;
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut conflicts = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if chords_interleave(&pos, edges[i], edges[j]) {
                    conflicts.push((i, j));
                }
            }
        }
        let limit = best.as_ref().map_or(cap.max(1), |(p, _)| p - 1);
        if limit == 0 {
            return true;
        }
        if let Chromatic::Exact { colors, coloring } = chromatic_number_exact(&ConflictGraph::from_edges(edges.len(), &conflicts), limit) {
            let pages = colors.max(1);
            if best.as_ref().map_or(true, |(p, _)| pages < *p) {
                if let Ok(layout) = BookLayout::new(g.clone(), order.to_vec(), coloring.iter().map(|&c| c.min(pages - 1)).collect()) {
                    *best = Some((pages, layout));
                }
            }
        }
        best.as_ref().is_some_and(|(p, _)| *p == 1)
    };
    if n <= 3 {
        try_order(&order, &mut best);
    } else {
        // vertex 0 first; reflections identified by requiring order[1] < order[n-1]
        permute_tail(1, &mut order, &mut |o: &[usize]| o[1] < o[n - 1] && try_order(o, &mut best));
    }
    if let Some((_, layout)) = &best {
        if !book_crossings(layout).is_empty() {
            return Err(Error::InvalidLayering("book search produced a crossing layout".into()));
        }
    }
    Ok(BookSearch {
        pages: best.as_ref().map(|(p, _)| *p),
        layout: best.map(|(_, l)| l),
        orders_examined: examined,
    })
}

fn permute_tail(i: usize, order: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if i + 1 >= order.len() {
        return visit(order);
    }
    for j in i..order.len() {
        order.swap(i, j);
        let stop = permute_tail(i + 1, order, visit);
        order.swap(i, j);
        if stop {
            return true;
        }
    }
    false
}

/// How the outer-type search generates candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RefuteStrategy {
    /// Lattice points per layout radius; candidates lie in a box three radii
    /// wide around the origin.
    pub resolution: usize,
}

/// A same-layer crossing between edges of equal role at two tripletons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingTally {
    pub first: String,
    pub second: String,
    pub role: EdgeRole,
    /// Number of full candidate drawings with this crossing.
    pub count: String,
    /// Every candidate drawing has this crossing.
    pub forced: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayoutReport {
    pub name: String,
    pub singletons: Vec<[String; 2]>,
    /// For four singletons: whether the hull angles at singletons 1 and 2
    /// sum to less than 180 degrees.
    pub angle_sum_12_below_180: Option<bool>,
    pub candidates_per_tripleton: Vec<usize>,
    /// Product of the candidate counts: the number of candidate drawings.
    pub combinations: String,
    pub nodes_visited: u64,
    /// The whole candidate space was decided within the budget.
    pub complete: bool,
    pub witness_found: bool,
    pub tallies: Vec<CrossingTally>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutationReport {
    pub n: usize,
    #[serde(rename = "type")]
    pub ty: TripletonType,
    pub strategy: String,
    pub candidates_examined: String,
    pub layouts: Vec<LayoutReport>,
    /// Crossings present in every candidate drawing of every layout.
    pub forced_everywhere: Vec<String>,
    #[serde(skip)]
    pub witnesses: Vec<(String, LayeredDrawing)>,
    pub witness_layouts: Vec<String>,
    /// Witnesses the full verifier rejected; always zero unless the search has a bug.
    pub rejected_witnesses: usize,
}

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

/// Singleton layouts tried by the outer-type search, numbered clockwise.
pub fn refutation_layouts(n: usize) -> Vec<(String, Vec<Point>)> {
    match n {
        3 => vec![
            ("triangle".into(), vec![p(0, 6), p(5, -3), p(-5, -3)]),
            ("skew triangle".into(), vec![p(-2, 5), p(6, 1), p(-4, -4)]),
        ],
        4 => vec![
            ("square".into(), vec![p(-4, 4), p(4, 4), p(4, -4), p(-4, -4)]),
            ("narrow left".into(), vec![p(-1, 2), p(6, 6), p(6, -6), p(-1, -2)]),
            ("narrow right".into(), vec![p(-6, 6), p(1, 2), p(1, -2), p(-6, -6)]),
            ("kite".into(), vec![p(0, 6), p(5, 0), p(0, -3), p(-5, 0)]),
            ("irregular".into(), vec![p(-5, 3), p(4, 6), p(6, -3), p(-2, -6)]),
            ("sharp 1 and 2".into(), vec![p(-6, 4), p(5, 1), p(-2, -3), p(-6, -4)]),
            ("flat 1 and 2".into(), vec![p(-3, 5), p(3, 5), p(6, -5), p(-6, -5)]),
        ],
        _ => {
            let circle = |rx: f64, ry: f64| -> Vec<Point> {
                (0..n)
                    .map(|i| {
                        let a = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * i as f64 / n as f64 + 0.05;
                        p((rx * a.cos()).round() as i64, (ry * a.sin()).round() as i64)
                    })
                    .collect()
            };
            vec![("circle".into(), circle(8.0, 8.0)), ("ellipse".into(), circle(9.0, 5.0))]
        }
    }
}

fn bitset_and(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

struct Tripleton {
    subset: SubsetVertex,
    /// Singleton indices of the low, middle and high edge.
    ends: [usize; 3],
    candidates: Vec<Point>,
}

/// Searches coherent outer drawings of `G_3(n)` of uniform type `ty` over the
/// curated singleton layouts, placing each tripleton on lattice points of its
/// type region outside the singleton hull. Candidate drawings are decided in
/// full through pairwise compatibility tables; `budget` limits backtracking
/// nodes per layout.
pub fn refute_outer_type(n: usize, ty: TripletonType, strategy: RefuteStrategy, budget: u64) -> Result<RefutationReport> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("need n >= 3, got {n}")));
    }
    if n > 8 {
        return Err(Error::TooLarge(format!("outer-type search is limited to n <= 8, got {n}")));
    }
    let r = strategy.resolution.max(1) as i64;
    let mut report = RefutationReport {
        n,
        ty,
        strategy: format!("type-constrained lattice, resolution {r}"),
        candidates_examined: String::new(),
        layouts: Vec::new(),
        forced_everywhere: Vec::new(),
        witnesses: Vec::new(),
        witness_layouts: Vec::new(),
        rejected_witnesses: 0,
    };
    let mut total = BigUint::zero();
    let mut forced_sets: Option<Vec<String>> = None;
    for (name, singles) in refutation_layouts(n) {
        let layout = search_layout(n, ty, r, budget, &name, &singles, &mut report)?;
        total += layout.combinations.parse::<BigUint>().unwrap_or_default();
        let forced: Vec<String> = layout
            .tallies
            .iter()
            .filter(|t| t.forced)
            .map(|t| format!("{:?}({})x{:?}({})", t.role, t.first, t.role, t.second))
            .collect();
        forced_sets = Some(match forced_sets {
            None => forced,
            Some(prev) => prev.into_iter().filter(|f| forced.contains(f)).collect(),
        });
        report.layouts.push(layout);
    }
    report.candidates_examined = total.to_string();
    report.forced_everywhere = forced_sets.unwrap_or_default();
    Ok(report)
}

fn search_layout(
    n: usize,
    ty: TripletonType,
    r: i64,
    budget: u64,
    name: &str,
    singles: &[Point],
    report: &mut RefutationReport,
) -> Result<LayoutReport> {
    if singles.len() != n || !in_strictly_convex_position(singles) {
        return Err(Error::NotConvexPosition);
    }
    let hull = convex_hull(singles);
    let radius = singles
        .iter()
        .flat_map(|q| [q.x.clone(), q.y.clone()])
        .map(|v| if v < int(0) { -v } else { v })
        .max()
        .unwrap_or_else(|| int(1));
    let numbering = SingletonNumbering::identity(n);
    let subsets = k_subsets(n, 3);
    let mut trips: Vec<Tripleton> = Vec::new();
    for &t in &subsets {
        let m = t.members();
        let ends = [m[0], m[1], m[2]];
        let mut candidates = Vec::new();
        for i in -3 * r..=3 * r {
            for j in -3 * r..=3 * r {
                let c = Point::new(&radius * rational(i, r), &radius * rational(j, r));
                if point_vs_hull(&c, &hull)? != HullLocation::Outside {
                    continue;
                }
                let Ok(order) = reflex_gap_order(&c, [&singles[ends[0]], &singles[ends[1]], &singles[ends[2]]]) else {
                    continue;
                };
                if TripletonType::new([order[0] as u8, order[1] as u8, order[2] as u8])? != ty {
                    continue;
                }
                // no singleton inside one of the three edges
                let mut pts: Vec<Point> = singles.to_vec();
                pts.push(c.clone());
                let frame = IntegerFrame::new(&pts);
                let blocked = ends.iter().any(|&s| (0..n).any(|v| v != s && frame.in_segment_interior(v, n, s)));
                if !blocked {
                    candidates.push(c);
                }
            }
        }
        trips.push(Tripleton { subset: t, ends, candidates });
    }

    let counts: Vec<usize> = trips.iter().map(|t| t.candidates.len()).collect();
    let combinations: BigUint = counts.iter().fold(BigUint::one(), |acc, &c| acc * BigUint::from(c));
    let k = trips.len();

    // compat[i][j][a]: bitset over candidates b of j compatible with candidate a of i
    let mut compat: Vec<Vec<Vec<Vec<u64>>>> = vec![vec![Vec::new(); k]; k];
    let mut tallies = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (ni, nj) = (counts[i], counts[j]);
            let words_j = nj.div_ceil(64);
            let words_i = ni.div_ceil(64);
            let mut fwd = vec![vec![0u64; words_j]; ni];
            let mut back = vec![vec![0u64; words_i]; nj];
            let mut crossing_pairs = [0u64; 3];
            for a in 0..ni {
                for b in 0..nj {
                    let (ok, crosses) = pair_check(singles, &trips[i], a, &trips[j], b);
                    for role in 0..3 {
                        if crosses[role] {
                            crossing_pairs[role] += 1;
                        }
                    }
                    if ok {
                        fwd[a][b / 64] |= 1 << (b % 64);
                        back[b][a / 64] |= 1 << (a % 64);
                    }
                }
            }
            let others: BigUint = counts
                .iter()
                .enumerate()
                .filter(|&(x, _)| x != i && x != j)
                .fold(BigUint::one(), |acc, (_, &c)| acc * BigUint::from(c));
            for (role, &cp) in crossing_pairs.iter().enumerate() {
                if cp == 0 {
                    continue;
                }
                let count = BigUint::from(cp) * &others;
                tallies.push(CrossingTally {
                    first: trips[i].subset.label(),
                    second: trips[j].subset.label(),
                    role: EdgeRole::ALL[role],
                    forced: count == combinations && !combinations.is_zero(),
                    count: count.to_string(),
                });
            }
            compat[i][j] = fwd;
            compat[j][i] = back;
        }
    }

    // backtracking over tripletons in order, intersecting compatibility rows
    let mut nodes = 0u64;
    let mut witness: Option<Vec<usize>> = None;
    let mut complete = true;
    if counts.iter().all(|&c| c > 0) {
        let full: Vec<Vec<u64>> = counts
            .iter()
            .map(|&c| {
                let mut v = vec![u64::MAX; c.div_ceil(64)];
                if c % 64 != 0 {
                    if let Some(last) = v.last_mut() {
                        *last = (1u64 << (c % 64)) - 1;
                    }
                }
                v
            })
            .collect();
        let mut chosen = vec![0usize; k];
        complete = backtrack(0, &compat, full, &mut chosen, &mut nodes, budget, &mut witness);
    }

    let mut witness_found = false;
    if let Some(choice) = witness {
        let placed: Vec<(SubsetVertex, Point)> = trips
            .iter()
            .zip(&choice)
            .map(|(t, &c)| (t.subset, t.candidates[c].clone()))
            .collect();
        let d = coherent_layers_drawing(n, singles.to_vec(), &placed)?;
        let ok = verify_geometric_thickness_witness(&d, 3)
            && is_coherent(&d, &numbering)
            && inner_outer(&d)? == InnerOuter::Outer
            && drawing_type(&d, &numbering)? == DrawingType::Uniform(ty);
        if ok {
            witness_found = true;
            report.witness_layouts.push(name.to_string());
            report.witnesses.push((name.to_string(), d));
        } else {
            report.rejected_witnesses += 1;
        }
    }
    let angle_sum_12_below_180 = if n == 4 {
        Some(angle_sum_below_pi(&singles[1], &singles[0], &singles[2], &singles[2], &singles[1], &singles[3])?)
    } else {
        None
    };
    Ok(LayoutReport {
        name: name.to_string(),
        singletons: singles.iter().map(|q| [format_rational(&q.x), format_rational(&q.y)]).collect(),
        angle_sum_12_below_180,
        candidates_per_tripleton: counts,
        combinations: combinations.to_string(),
        nodes_visited: nodes,
        complete: complete || witness_found,
        witness_found,
        tallies,
    })
}

/// Compatibility of two placed tripletons, and which equal-role edge pairs
/// cross.
fn pair_check(singles: &[Point], ti: &Tripleton, a: usize, tj: &Tripleton, b: usize) -> (bool, [bool; 3]) {
    let n = singles.len();
    let mut pts: Vec<Point> = singles.to_vec();
    pts.push(ti.candidates[a].clone());
    pts.push(tj.candidates[b].clone());
    let frame = IntegerFrame::new(&pts);
    let (ci, cj) = (n, n + 1);
    let mut crosses = [false; 3];
    if frame.same_point(ci, cj) {
        return (false, crosses);
    }
    let mut ok = true;
    for &s in &tj.ends {
        if frame.in_segment_interior(ci, cj, s) {
            ok = false;
        }
    }
    for &s in &ti.ends {
        if frame.in_segment_interior(cj, ci, s) {
            ok = false;
        }
    }
    for role in 0..3 {
        if frame.relation(ci, ti.ends[role], cj, tj.ends[role]) == SegmentRelation::ProperCrossing {
            crosses[role] = true;
            ok = false;
        }
    }
    (ok, crosses)
}

/// Returns false when the node budget ran out before the space was decided.
fn backtrack(
    i: usize,
    compat: &[Vec<Vec<Vec<u64>>>],
    allowed: Vec<Vec<u64>>,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
    witness: &mut Option<Vec<usize>>,
) -> bool {
    if witness.is_some() {
        return true;
    }
    if i == chosen.len() {
        *witness = Some(chosen.clone());
        return true;
    }
    for (w, &word) in allowed[i].iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let c = w * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            *nodes += 1;
            if *nodes > budget {
                return false;
            }
            chosen[i] = c;
            let mut next = allowed.clone();
            let mut dead = false;
            for j in i + 1..chosen.len() {
                bitset_and(&mut next[j], &compat[i][j][c]);
                if next[j].iter().all(|&x| x == 0) {
                    dead = true;
                    break;
                }
            }
            if !dead && !backtrack(i + 1, compat, next, chosen, nodes, budget, witness) {
                return false;
            }
            if witness.is_some() {
                return true;
            }
        }
    }
    true
}

/// Roles at each tripleton of a drawing, for reporting.
pub fn role_summary(d: &LayeredDrawing) -> Result<Vec<EdgeRole>> {
    let g = d
        .graph()
        .as_incidence()
        .ok_or_else(|| Error::Precondition("roles need a subset-inclusion graph".into()))?;
    edge_roles(g, &SingletonNumbering::identity(g.n()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::layer_crossings;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    /// Minimum colouring by trying every assignment in restricted-growth form.
    fn brute_chromatic(cg: &ConflictGraph) -> usize {
        let n = cg.node_count();
        if n == 0 {
            return 0;
        }
        let edges = cg.edges();
        fn rec(i: usize, colors: &mut Vec<usize>, max: usize, k: usize, edges: &[Edge]) -> bool {
            if i == colors.len() {
                return edges.iter().all(|&(a, b)| colors[a] != colors[b]);
            }
            for c in 0..(max + 1).min(k) {
                colors[i] = c;
                if rec(i + 1, colors, max.max(c + 1), k, edges) {
                    return true;
                }
            }
            false
        }
        (1..=n).find(|&k| rec(0, &mut vec![0; n], 0, k, &edges)).unwrap_or(n)
    }

    #[test]
    fn chromatic_examples() {
        let tri = ConflictGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(chromatic_number_exact(&tri, 5).colors(), Some(3));
        assert_eq!(chromatic_number_exact(&tri, 2), Chromatic::AboveCap);
        let bip = ConflictGraph::from_edges(6, &[(0, 3), (0, 4), (1, 4), (2, 5), (1, 5)]);
        assert_eq!(chromatic_number_exact(&bip, 5).colors(), Some(2));
        let c5 = ConflictGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(chromatic_number_exact(&c5, 5).colors(), Some(3));
        assert_eq!(chromatic_number_exact(&c5, 2), Chromatic::AboveCap);
        let empty = ConflictGraph::from_edges(4, &[]);
        assert_eq!(chromatic_number_exact(&empty, 1).colors(), Some(1));
    }

    #[test]
    fn chromatic_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let density = rng.gen_range(0.1..0.9);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((a, b));
                    }
                }
            }
            let cg = ConflictGraph::from_edges(n, &edges);
            let brute = brute_chromatic(&cg);
            match chromatic_number_exact(&cg, n) {
                Chromatic::Exact { colors, coloring } => {
                    assert_eq!(colors, brute, "{edges:?}");
                    assert!(edges.iter().all(|&(a, b)| coloring[a] != coloring[b]));
                }
                Chromatic::AboveCap => panic!("cap n is always enough"),
            }
        }
    }

    #[test]
    fn conflict_graph_examples() {
        let k4 = Graph::complete(4);
        let convex = pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(crossing_conflict_graph(&k4, &convex).unwrap().edge_count(), 1);
        let inner = pts(&[(0, 0), (6, 0), (0, 6), (1, 1)]);
        assert_eq!(crossing_conflict_graph(&k4, &inner).unwrap().edge_count(), 0);
        let c4 = Graph::cycle(4);
        assert_eq!(crossing_conflict_graph(&c4, &convex).unwrap().edge_count(), 0);
        let bad = pts(&[(0, 0), (1, 0), (2, 0), (5, 5)]);
        assert!(crossing_conflict_graph(&k4, &bad).is_err());
    }

    #[test]
    fn fixed_placement_examples() {
        let k4 = Graph::complete(4);
        let convex = pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let r = min_layers_fixed_placement(&k4, &convex, 4).unwrap();
        assert_eq!(r.layers, Some(2));
        assert!(layer_crossings(r.witness.as_ref().unwrap()).unwrap().crossings.is_empty());
        let inner = pts(&[(0, 0), (6, 0), (0, 6), (1, 1)]);
        assert_eq!(min_layers_fixed_placement(&k4, &inner, 4).unwrap().layers, Some(1));
        let c6 = Graph::cycle(6);
        assert_eq!(min_layers_fixed_placement(&c6, &convex_placement(6), 4).unwrap().layers, Some(1));
    }

    #[test]
    fn placement_search_examples() {
        let k4 = Graph::complete(4);
        let r = geometric_thickness_upper_search(&k4, &PlacementStrategy::Grid { resolution: 3, budget: 100_000 }, 3).unwrap();
        assert_eq!(r.layers, 1);

        let k5 = Graph::complete(5);
        let convex = geometric_thickness_upper_search(&k5, &PlacementStrategy::Convex, 3).unwrap();
        assert_eq!(convex.layers, 3);
        let grid = geometric_thickness_upper_search(&k5, &PlacementStrategy::Grid { resolution: 3, budget: 100_000 }, 3).unwrap();
        assert_eq!(grid.layers, 2);

        let cube = Graph::cube();
        let r = geometric_thickness_upper_search(&cube, &PlacementStrategy::Random { seed: 1, trials: 200 }, 3).unwrap();
        assert_eq!(r.layers, 1);
        assert!(verify_geometric_thickness_witness(&r.drawing, 1));

        // too few cells for the vertices
        let none = geometric_thickness_upper_search(&k5, &PlacementStrategy::Grid { resolution: 2, budget: 10 }, 3);
        assert!(matches!(none, Err(Error::SearchExhausted)));
    }

    #[test]
    fn placement_search_is_deterministic() {
        let k6 = Graph::complete(6);
        let s = PlacementStrategy::Random { seed: 9, trials: 60 };
        let a = geometric_thickness_upper_search(&k6, &s, 4).unwrap();
        let b = geometric_thickness_upper_search(&k6, &s, 4).unwrap();
        assert_eq!(a.drawing, b.drawing);
    }

    #[test]
    fn book_examples() {
        let c6 = book_thickness_exact(&Graph::cycle(6), 3, false).unwrap();
        assert_eq!(c6.pages, Some(1));
        let k4 = book_thickness_exact(&Graph::complete(4), 3, false).unwrap();
        assert_eq!(k4.pages, Some(2));
        let k5 = book_thickness_exact(&Graph::complete(5), 3, false).unwrap();
        assert_eq!(k5.pages, Some(3));
        assert!(book_crossings(k5.layout.as_ref().unwrap()).is_empty());
        assert_eq!(book_thickness_exact(&Graph::complete(5), 2, false).unwrap().pages, None);
        assert!(matches!(book_thickness_exact(&Graph::complete(11), 3, false), Err(Error::TooLarge(_))));
    }

    /// Minimum pages over every linear order and every page assignment.
    fn brute_book(g: &Graph) -> usize {
        let n = g.vertex_count();
        let edges = g.edges();
        let mut best = usize::MAX;
        let mut order: Vec<usize> = (0..n).collect();
        permute_tail(0, &mut order, &mut |o: &[usize]| {
            let mut pos = vec![0; n];
            for (i, &v) in o.iter().enumerate() {
                pos[v] = i;
            }
            for pages in 1..best.min(edges.len().max(1) + 1) {
                let total = pages.pow(edges.len() as u32);
                let found = (0..total).any(|mut code| {
                    let assign: Vec<usize> = (0..edges.len()).map(|_| { let p = code % pages; code /= pages; p }).collect();
                    (0..edges.len()).all(|i| (i + 1..edges.len()).all(|j| assign[i] != assign[j] || !chords_interleave(&pos, edges[i], edges[j])))
                });
                if found {
                    best = pages;
                    break;
                }
            }
            false
        });
        best
    }

    #[test]
    fn book_matches_brute_force_and_relabeling() {
        for g in [Graph::cycle(6), Graph::complete(4), Graph::complete_bipartite(2, 3), Graph::path(4)] {
            let exact = book_thickness_exact(&g, 4, false).unwrap().pages.unwrap();
            assert_eq!(exact, brute_book(&g));
            let mut rng = ChaCha8Rng::seed_from_u64(exact as u64);
            for _ in 0..5 {
                let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                let h = g.relabel(&perm);
                assert_eq!(book_thickness_exact(&h, 4, false).unwrap().pages.unwrap(), exact);
            }
        }
    }

    #[test]
    fn single_tripleton_always_has_a_witness() {
        for ty in TripletonType::ALL {
            let r = refute_outer_type(3, ty, RefuteStrategy { resolution: 3 }, 1_000_000).unwrap();
            assert!(!r.witnesses.is_empty(), "{ty}");
            assert_eq!(r.rejected_witnesses, 0);
        }
    }
}

//! Explicit layerings and drawings, each returned together with the verdict
//! of the verifier.

use rand::Rng;
use serde::Serialize;

use crate::classify::{
    crossing_character, edge_roles, inner_outer, is_coherent, CrossingCharacter, InnerOuter,
    SingletonNumbering,
};
use crate::drawing::{validate_drawing, CrossingReport, LayeredDrawing};
use crate::error::{Error, Result};
use crate::geometry::{int, rational, rational_from_f64, Point, Rational};
use crate::incidence::{generate_incidence_graph, IncidenceGraph, SubsetVertex};

/// Layer of every edge of `G_3(n)`: low, middle and high edges under the
/// identity numbering go to layers 0, 1 and 2. Each layer is a star forest.
pub fn thickness3_layering(n: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("need n >= 3, got {n}")));
    }
    let g = generate_incidence_graph(3, n)?;
    let roles = edge_roles(&g, &SingletonNumbering::identity(n))?;
    Ok(roles.iter().map(|r| r.digit() as usize).collect())
}

/// Largest number of edges any single `k`-subset has within one layer, per
/// layer. A value of 1 everywhere means every layer is a star forest centred
/// on singletons.
pub fn max_kton_degree_per_layer(g: &IncidenceGraph, layers: &[usize]) -> Vec<usize> {
    let count = layers.iter().max().map_or(0, |&m| m + 1);
    let mut deg = vec![vec![0usize; g.vertex_count()]; count];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let t = if g.vertex(a).is_singleton() { b } else { a };
        deg[layers[e]][t] += 1;
    }
    deg.iter().map(|d| d.iter().copied().max().unwrap_or(0)).collect()
}

/// A drawing together with its verification.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub drawing: LayeredDrawing,
    pub report: CrossingReport,
    pub target_layers: usize,
    /// Valid, crossing-free and using exactly `target_layers` layers.
    pub verified: bool,
}

impl ConstructionResult {
    pub fn check(drawing: LayeredDrawing, target_layers: usize) -> Self {
        let report = validate_drawing(&drawing);
        let verified = report.is_clean() && drawing.layer_count() == target_layers;
        ConstructionResult { drawing, report, target_layers, verified }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionSummary {
    pub vertices: usize,
    pub edges: usize,
    pub layers: usize,
    pub target_layers: usize,
    pub verified: bool,
    pub report: CrossingReport,
}

impl From<&ConstructionResult> for ConstructionSummary {
    fn from(r: &ConstructionResult) -> Self {
        ConstructionSummary {
            vertices: r.drawing.graph().vertex_count(),
            edges: r.drawing.edges().len(),
            layers: r.drawing.layer_count(),
            target_layers: r.target_layers,
            verified: r.verified,
            report: r.report.clone(),
        }
    }
}

/// The cube `G_3(4)` as two nested squares, all edges in one layer.
pub fn g3_planar_drawing_n4() -> LayeredDrawing {
    star_cluster_drawing(4).expect("n = 4 is a valid cluster size")
}

/// A three-layer drawing of `G_3(8)`: singletons 0, 2, 4, 6 far out on a
/// square, everything else in a small central cluster.
pub fn g38_geometric_drawing() -> LayeredDrawing {
    star_cluster_drawing(8).expect("n = 8 is a valid cluster size")
}

/// The `ceil((n-2)/2)`-layer scheme for `G_3(n)`: four inner singletons and
/// all tripletons in a central cluster whose inner edges form one planar
/// layer, and the other singletons far away in antipodal pairs, one layer per
/// pair. Odd `n` is drawn for `n + 1` and restricted.
pub fn upper_bound_drawing(n: usize) -> Result<ConstructionResult> {
    if n < 4 {
        return Err(Error::InvalidParameters(format!("need n >= 4, got {n}")));
    }
    let drawing = if n % 2 == 0 {
        star_cluster_drawing(n)?
    } else {
        restrict_to_first(&star_cluster_drawing(n + 1)?, n)?
    };
    Ok(ConstructionResult::check(drawing, (n - 2).div_ceil(2)))
}

/// The four inner singletons: the first four of 1, 3, 5, 7, 0, 2 below `n`.
pub fn inner_singletons(n: usize) -> [usize; 4] {
    let mut inner: Vec<usize> = [1, 3, 5, 7, 0, 2].into_iter().filter(|&m| m < n).take(4).collect();
    inner.sort_unstable();
    [inner[0], inner[1], inner[2], inner[3]]
}

/// Antipodal pairs of outer singletons: sorted outer members, the `i`-th
/// paired with the `(i + m/2)`-th.
pub fn outer_pairs(n: usize) -> Vec<(usize, usize)> {
    let inner = inner_singletons(n);
    let outer: Vec<usize> = (0..n).filter(|m| !inner.contains(m)).collect();
    let half = outer.len() / 2;
    (0..half).map(|i| (outer[i], outer[i + half])).collect()
}

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn lerp(a: &Point, b: &Point, t: &Rational) -> Point {
    Point::new(&a.x + (&b.x - &a.x) * t, &a.y + (&b.y - &a.y) * t)
}

fn star_cluster_drawing(n: usize) -> Result<LayeredDrawing> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("cluster scheme needs even n >= 4, got {n}")));
    }
    let g = generate_incidence_graph(3, n)?;
    let inner = inner_singletons(n);
    let pairs = outer_pairs(n);
    let inner_pos = |m: usize| inner.iter().position(|&x| x == m);

    // the cube on the inner singletons: S_j is inner[j], T_j misses inner[j]
    let s_pt = [pt(-6, -6), pt(6, 6), pt(2, -2), pt(-2, 2)];
    let t_pt = [pt(2, 2), pt(-2, -2), pt(-6, 6), pt(6, -6)];
    // for each pair of inner indices: the face holding both, given by the
    // diagonal that avoids them; the pair {0, 1} uses the outer face
    let face_diagonal = |j: usize, k: usize| -> Option<(usize, usize)> {
        match (j.min(k), j.max(k)) {
            (0, 2) => Some((3, 1)),
            (1, 2) => Some((3, 0)),
            (1, 3) => Some((2, 0)),
            (0, 3) => Some((2, 1)),
            (2, 3) => Some((1, 0)),
            _ => None,
        }
    };

    let mut coords: Vec<Option<Point>> = vec![None; g.vertex_count()];
    for (j, &m) in inner.iter().enumerate() {
        coords[m] = Some(s_pt[j].clone());
    }
    for (p, &(a, b)) in pairs.iter().enumerate() {
        // integer points far out on a line through the origin, one line per pair
        let phi = std::f64::consts::PI * p as f64 / pairs.len() as f64 + 0.3;
        let far = 1.0e9;
        let (x, y) = ((far * phi.cos()).round() as i64, (far * phi.sin()).round() as i64);
        coords[a] = Some(pt(x, y));
        coords[b] = Some(pt(-x, -y));
    }

    // paths between two inner singletons, grouped by face
    let mut by_face: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    let mut pendants: Vec<Vec<usize>> = vec![Vec::new(); 4];
    let mut isolated = Vec::new();
    for t in g.kton_indices() {
        let members = g.vertex(t).members();
        let ins: Vec<usize> = members.iter().filter_map(|&m| inner_pos(m)).collect();
        match ins.len() {
            3 => {
                let missing = (0..4).find(|j| !ins.contains(j)).unwrap_or(0);
                coords[t] = Some(t_pt[missing].clone());
            }
            2 => by_face.entry((ins[0], ins[1])).or_default().push(t),
            1 => pendants[ins[0]].push(t),
            _ => isolated.push(t),
        }
    }
    for (&(j, k), ts) in &by_face {
        let m = ts.len() as i64;
        for (q, &t) in ts.iter().enumerate() {
            let q = q as i64;
            coords[t] = Some(match face_diagonal(j, k) {
                Some((a, b)) => lerp(&t_pt[a], &t_pt[b], &rational(q + 1, m + 1)),
                // beyond the corner T_3 of the outer square, away from the square
                None => pt(6 + q + 1, -6 - q - 1),
            });
        }
    }

    // pendant tripletons: short edges into the widest free angle at their singleton
    let neighbours_of = |j: usize, coords: &[Option<Point>]| -> Vec<(f64, f64)> {
        let s = inner[j];
        g.edges()
            .iter()
            .filter(|&&(a, _)| a == s)
            .filter_map(|&(_, t)| coords[t].as_ref().map(Point::to_f64))
            .collect()
    };
    for (j, ts) in pendants.iter().enumerate() {
        if ts.is_empty() {
            continue;
        }
        let (sx, sy) = s_pt[j].to_f64();
        let mut angles: Vec<f64> = neighbours_of(j, &coords)
            .iter()
            .map(|&(x, y)| (y - sy).atan2(x - sx))
            .collect();
        angles.sort_by(f64::total_cmp);
        let (mut start, mut width) = (0.0, 2.0 * std::f64::consts::PI);
        for i in 0..angles.len() {
            let next = if i + 1 < angles.len() { angles[i + 1] } else { angles[0] + 2.0 * std::f64::consts::PI };
            if i == 0 || next - angles[i] > width {
                start = angles[i];
                width = next - angles[i];
            }
        }
        let m = ts.len() as f64;
        for (q, &t) in ts.iter().enumerate() {
            let a = start + width * (q as f64 + 1.0) / (m + 1.0);
            let r = 0.6 + 0.05 * (q % 3) as f64;
            coords[t] = Some(Point::new(
                rational_from_f64(sx + r * a.cos(), 10_000),
                rational_from_f64(sy + r * a.sin(), 10_000),
            ));
        }
    }

    // tripletons of outer singletons only: a loose grid beyond the corner T_2
    for (q, &t) in isolated.iter().enumerate() {
        let q = q as i64;
        let x = rational(-140 - 9 * (q % 5) - q, 10);
        let y = rational(140 + 9 * (q / 5) + 3 * (q % 5), 10);
        coords[t] = Some(Point::new(x, y));
    }

    let coords: Vec<Point> = coords
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::InvalidDrawing(format!("vertex {v} was not placed"))))
        .collect::<Result<_>>()?;
    let layers = g
        .edges()
        .iter()
        .map(|&(s, _)| match pairs.iter().position(|&(a, b)| a == s || b == s) {
            Some(p) => p + 1,
            None => 0,
        })
        .collect();
    LayeredDrawing::new(g, coords, layers)
}

/// The subdrawing on singletons `0..n` and the tripletons among them, with
/// layer indices renumbered to stay contiguous.
fn restrict_to_first(d: &LayeredDrawing, n: usize) -> Result<LayeredDrawing> {
    let g = d
        .graph()
        .as_incidence()
        .ok_or_else(|| Error::Precondition("restriction needs a subset-inclusion graph".into()))?;
    let keep_bits = (1u64 << n) - 1;
    let kept: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.vertex(v).bits() & !keep_bits == 0).collect();
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let vertices: Vec<SubsetVertex> = kept.iter().map(|&v| g.vertex(v)).collect();
    let mut edges = Vec::new();
    let mut layers = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if new_index[a] != usize::MAX && new_index[b] != usize::MAX {
            edges.push((new_index[a], new_index[b]));
            layers.push(d.layers()[e]);
        }
    }
    let mut used: Vec<usize> = layers.clone();
    used.sort_unstable();
    used.dedup();
    let layers = layers.iter().map(|l| used.binary_search(l).unwrap_or(0)).collect();
    let sub = IncidenceGraph::from_parts(g.k(), n, vertices, edges)?;
    let coords = kept.iter().map(|&v| d.coords()[v].clone()).collect();
    LayeredDrawing::new(sub, coords, layers)
}

/// Drawing of singletons `0..n` and the given tripletons, with roles under
/// the identity numbering as layers.
pub fn coherent_layers_drawing(n: usize, singletons: Vec<Point>, tripletons: &[(SubsetVertex, Point)]) -> Result<LayeredDrawing> {
    let ktons: Vec<SubsetVertex> = tripletons.iter().map(|(t, _)| *t).collect();
    let g = IncidenceGraph::with_ktons(3, n, &ktons)?;
    let roles = edge_roles(&g, &SingletonNumbering::identity(n))?;
    let layers = roles.iter().map(|r| r.digit() as usize).collect();
    let mut coords = singletons;
    coords.extend(tripletons.iter().map(|(_, p)| p.clone()));
    LayeredDrawing::new(g, coords, layers)
}

/// Six singletons numbered clockwise around a hexagon.
pub fn hexagon() -> Vec<Point> {
    vec![pt(0, 10), pt(9, 5), pt(9, -5), pt(0, -10), pt(-9, -5), pt(-9, 5)]
}

/// A coherent inner drawing of tripletons `{0,1,3}` and `{2,4,5}` over a
/// hexagon, whose low-high crossing has the requested character. The two
/// tripleton points are the first lattice points that work, in scan order.
pub fn two_tripleton_inner_fixture(character: CrossingCharacter) -> LayeredDrawing {
    let abc = SubsetVertex::from_members(&[0, 1, 3]).expect("valid subset");
    let def = SubsetVertex::from_members(&[2, 4, 5]).expect("valid subset");
    let num = SingletonNumbering::identity(6);
    for x1 in -8..=8 {
        for y1 in -8..=8 {
            for x2 in -8..=8 {
                for y2 in -8..=8 {
                    let Ok(d) = coherent_layers_drawing(6, hexagon(), &[(abc, pt(x1, y1)), (def, pt(x2, y2))]) else {
                        continue;
                    };
                    if crossing_character(&d, &num, 6, 7).ok() == Some(character) {
                        return d;
                    }
                }
            }
        }
    }
    unreachable!("the lattice scan always finds both crossing characters")
}

/// A random coherent inner drawing of two tripletons `abc`, `def` with
/// `a < d < c < f` over `6..=9` singletons near a circle; `None` when the
/// sampled placement is not coherent. Returns the drawing and the two
/// tripleton vertex indices.
pub fn random_two_tripleton_inner(rng: &mut impl Rng) -> Option<(LayeredDrawing, usize, usize)> {
    let n: usize = rng.gen_range(6..=9);
    // integer points near a circle of radius 1e9, far enough apart that
    // rounding keeps them in strictly convex position; decreasing angle is clockwise
    let mut angles: Vec<i64> = Vec::new();
    while angles.len() < n {
        let a = rng.gen_range(-3000..=3000);
        if !angles.contains(&a) {
            angles.push(a);
        }
    }
    angles.sort_unstable_by(|a, b| b.cmp(a));
    let singletons: Vec<Point> = angles
        .iter()
        .map(|&a| {
            let theta = a as f64 / 1000.0;
            Point::from_ints((1e9 * theta.cos()).round() as i64, (1e9 * theta.sin()).round() as i64)
        })
        .collect();
    let mut picks: Vec<usize> = (0..n).collect();
    for i in 0..4 {
        let j = rng.gen_range(i..n);
        picks.swap(i, j);
    }
    let mut four = [picks[0], picks[1], picks[2], picks[3]];
    four.sort_unstable();
    let [a, d, c, f] = four;
    // the middle singletons may coincide with d or c
    let b = rng.gen_range(a + 1..c);
    let e = rng.gen_range(d + 1..f);
    let interior = |rng: &mut dyn rand::RngCore| {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..50)).collect();
        let total: i64 = w.iter().sum();
        let mut x = int(0);
        let mut y = int(0);
        for (p, &wi) in singletons.iter().zip(&w) {
            x += &p.x * rational(wi, total);
            y += &p.y * rational(wi, total);
        }
        Point::new(x, y)
    };
    let abc = SubsetVertex::from_members(&[a, b, c]).ok()?;
    let def = SubsetVertex::from_members(&[d, e, f]).ok()?;
    let (p1, p2) = (interior(rng), interior(rng));
    let drawing = coherent_layers_drawing(n, singletons, &[(abc, p1), (def, p2)]).ok()?;
    let num = SingletonNumbering::identity(n);
    (inner_outer(&drawing).ok()? == InnerOuter::Inner && is_coherent(&drawing, &num)).then_some((drawing, n, n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::clockwise_numbering;
    use crate::drawing::{verify_geometric_thickness_witness, verify_thickness_layering};
    use crate::graph::Graph;
    use crate::incidence::binomial;
    use crate::planarity::is_planar;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn star_layering_counts() {
        for n in 3..=10 {
            let g = generate_incidence_graph(3, n).unwrap();
            let layers = thickness3_layering(n).unwrap();
            let per_layer = binomial(n, 3).unwrap() as usize;
            for l in 0..3 {
                assert_eq!(layers.iter().filter(|&&x| x == l).count(), per_layer);
            }
            assert_eq!(max_kton_degree_per_layer(&g, &layers), vec![1, 1, 1]);
            let plain = Graph::from(&g);
            assert!(verify_thickness_layering(&plain, &layers, 3).unwrap());
            for l in 0..3 {
                assert!(plain.edge_subgraph(|e| layers[e] == l).is_forest());
            }
        }
        assert!(thickness3_layering(2).is_err());
    }

    #[test]
    fn cube_drawing() {
        let d = g3_planar_drawing_n4();
        assert_eq!(d.graph().vertex_count(), 8);
        assert_eq!(d.layer_count(), 1);
        assert!(verify_geometric_thickness_witness(&d, 1));
    }

    #[test]
    fn g38_drawing() {
        let d = g38_geometric_drawing();
        assert_eq!(d.graph().vertex_count(), 64);
        assert_eq!(d.edges().len(), 168);
        let report = validate_drawing(&d);
        assert!(report.is_valid(), "{report:?}");
        assert!(report.crossings.is_empty(), "{:?}", report.crossings);
        assert!(verify_geometric_thickness_witness(&d, 3));
        let plain = d.graph().to_graph();
        assert!(is_planar(&plain.edge_subgraph(|e| d.layers()[e] == 0)));
        // the outer singletons are the even ones
        assert_eq!(inner_singletons(8), [1, 3, 5, 7]);
        assert_eq!(outer_pairs(8), vec![(0, 4), (2, 6)]);
    }

    #[test]
    fn upper_bound_small_cases() {
        assert!(upper_bound_drawing(3).is_err());
        let r4 = upper_bound_drawing(4).unwrap();
        assert!(r4.verified);
        assert_eq!(r4.drawing, g3_planar_drawing_n4());
        for n in 5..=8 {
            let r = upper_bound_drawing(n).unwrap();
            assert!(r.verified, "n = {n}: {:?}", r.report);
            assert_eq!(r.drawing.layer_count(), (n - 2).div_ceil(2));
            let g = r.drawing.graph().as_incidence().unwrap();
            assert_eq!(g.vertex_count(), n + binomial(n, 3).unwrap() as usize);
        }
    }

    #[test]
    fn fixtures_have_requested_character() {
        for ch in [CrossingCharacter::Convex, CrossingCharacter::Concave] {
            let d = two_tripleton_inner_fixture(ch);
            let num = clockwise_numbering(&d, 0).unwrap();
            assert_eq!(num, SingletonNumbering::identity(6));
            assert!(is_coherent(&d, &num));
            assert_eq!(inner_outer(&d).unwrap(), InnerOuter::Inner);
            assert_eq!(crossing_character(&d, &num, 6, 7).unwrap(), ch);
        }
    }

    #[test]
    fn random_inner_pairs_cross_exactly_once() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut done = 0;
        while done < 300 {
            if let Some((d, abc, def)) = random_two_tripleton_inner(&mut rng) {
                let n = d.graph().as_incidence().unwrap().n();
                crossing_character(&d, &SingletonNumbering::identity(n), abc, def).unwrap();
                done += 1;
            }
        }
    }
}

//! Exact planar predicates over arbitrary-precision rationals.
//!
//! Orientation convention: counterclockwise is positive, as in ordinary
//! mathematical axes. "Clockwise" everywhere in this crate means clockwise in
//! that frame.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{RefNum, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let r = BigRational::from_str(s.trim()).map_err(|e| Error::Format(format!("bad rational {s:?}: {e}")))?;
    Ok(r)
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Closest rational with the given denominator; only for building inputs.
pub fn rational_from_f64(x: f64, denom: i64) -> Rational {
    rational((x * denom as f64).round() as i64, denom)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: int(x), y: int(y) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point { x: &self.x + dx, y: &self.y + dy }
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point { x: &self.x * s, y: &self.y * s }
    }

    /// Applies the linear map `[[a, b], [c, d]]`.
    pub fn linear(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Point {
        Point {
            x: a * &self.x + b * &self.y,
            y: c * &self.x + d * &self.y,
        }
    }

    fn lex_cmp(&self, other: &Point) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
    Collinear,
}

/// Read access to exact planar coordinates, so the predicates run unchanged on
/// rational points and on integer frames.
pub trait Coords {
    type Scalar: Clone + Ord + Signed;
    fn xy(&self) -> (&Self::Scalar, &Self::Scalar);
}

impl Coords for Point {
    type Scalar = Rational;
    fn xy(&self) -> (&Rational, &Rational) {
        (&self.x, &self.y)
    }
}

impl Coords for [i128; 2] {
    type Scalar = i128;
    fn xy(&self) -> (&i128, &i128) {
        (&self[0], &self[1])
    }
}

impl Coords for [BigInt; 2] {
    type Scalar = BigInt;
    fn xy(&self) -> (&BigInt, &BigInt) {
        (&self[0], &self[1])
    }
}

/// Sign of `(q - p) x (r - p)` as -1, 0 or 1.
pub fn orient_sign<P: Coords>(p: &P, q: &P, r: &P) -> i8
where
    for<'a> &'a P::Scalar: RefNum<P::Scalar>,
{
    let (px, py) = p.xy();
    let (qx, qy) = q.xy();
    let (rx, ry) = r.xy();
    let lhs = (qx - px) * (ry - py);
    let rhs = (qy - py) * (rx - px);
    match lhs.cmp(&rhs) {
        Ordering::Greater => 1,
        Ordering::Less => -1,
        Ordering::Equal => 0,
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    match orient_sign(p, q, r) {
        1 => Orientation::Counterclockwise,
        -1 => Orientation::Clockwise,
        _ => Orientation::Collinear,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateInput("segment endpoints coincide".into()));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Disjoint,
    ProperCrossing,
    SharedEndpoint,
    Touching,
    Overlapping,
}

pub fn segment_relation(s: &Segment, t: &Segment) -> SegmentRelation {
    relation_of(&s.a, &s.b, &t.a, &t.b)
}

fn same<P: Coords>(p: &P, q: &P) -> bool {
    p.xy() == q.xy()
}

/// `r` lies in the closed bounding box of `p` and `q`.
fn within_box<P: Coords>(p: &P, q: &P, r: &P) -> bool {
    let (px, py) = p.xy();
    let (qx, qy) = q.xy();
    let (rx, ry) = r.xy();
    let (lx, hx) = if px <= qx { (px, qx) } else { (qx, px) };
    let (ly, hy) = if py <= qy { (py, qy) } else { (qy, py) };
    lx <= rx && rx <= hx && ly <= ry && ry <= hy
}

/// Relation between segments `ab` and `cd`; both must be non-degenerate.
pub fn relation_of<P: Coords>(a: &P, b: &P, c: &P, d: &P) -> SegmentRelation
where
    for<'x> &'x P::Scalar: RefNum<P::Scalar>,
{
    let o1 = orient_sign(a, b, c);
    let o2 = orient_sign(a, b, d);
    if o1 == 0 && o2 == 0 {
        return collinear_relation(a, b, c, d);
    }
    let o3 = orient_sign(c, d, a);
    let o4 = orient_sign(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return SegmentRelation::ProperCrossing;
    }
    if same(a, c) || same(a, d) || same(b, c) || same(b, d) {
        // not collinear, so the shared point is the whole intersection
        return SegmentRelation::SharedEndpoint;
    }
    if (o1 == 0 && within_box(a, b, c))
        || (o2 == 0 && within_box(a, b, d))
        || (o3 == 0 && within_box(c, d, a))
        || (o4 == 0 && within_box(c, d, b))
    {
        return SegmentRelation::Touching;
    }
    SegmentRelation::Disjoint
}

fn collinear_relation<P: Coords>(a: &P, b: &P, c: &P, d: &P) -> SegmentRelation {
    // project on x unless the common line is vertical
    let use_x = a.xy().0 != b.xy().0;
    let key = |p: &P| if use_x { p.xy().0.clone() } else { p.xy().1.clone() };
    let sorted = |u: P::Scalar, v: P::Scalar| if u <= v { (u, v) } else { (v, u) };
    let (s0, s1) = sorted(key(a), key(b));
    let (t0, t1) = sorted(key(c), key(d));
    let lo = s0.max(t0);
    let hi = s1.min(t1);
    match lo.cmp(&hi) {
        Ordering::Less => SegmentRelation::Overlapping,
        Ordering::Equal => SegmentRelation::SharedEndpoint,
        Ordering::Greater => SegmentRelation::Disjoint,
    }
}

/// `p` lies strictly inside segment `ab`.
pub fn in_segment_interior<P: Coords>(p: &P, a: &P, b: &P) -> bool
where
    for<'x> &'x P::Scalar: RefNum<P::Scalar>,
{
    !same(p, a) && !same(p, b) && orient_sign(a, b, p) == 0 && within_box(a, b, p)
}

/// Points rescaled by the common denominator, so predicates run on integers.
///
/// Orientation and incidence are invariant under positive scaling, so every
/// predicate gives the same answer in this frame as on the rational input.
#[derive(Clone, Debug)]
pub enum IntegerFrame {
    Small(Vec<[i128; 2]>),
    Big(Vec<[BigInt; 2]>),
}

impl IntegerFrame {
    pub fn new(points: &[Point]) -> Self {
        let mut lcm = BigInt::from(1);
        for p in points {
            lcm = lcm.lcm(p.x.denom()).lcm(p.y.denom());
        }
        let scale = |r: &Rational| r.numer() * (&lcm / r.denom());
        let big: Vec<[BigInt; 2]> = points.iter().map(|p| [scale(&p.x), scale(&p.y)]).collect();
        // differences need one more bit and products of differences twice that
        let fits = big.iter().flatten().all(|v| v.bits() <= 61);
        if fits {
            IntegerFrame::Small(
                big.iter()
                    .map(|[x, y]| [x.to_i128().unwrap_or(0), y.to_i128().unwrap_or(0)])
                    .collect(),
            )
        } else {
            IntegerFrame::Big(big)
        }
    }

    pub fn len(&self) -> usize {
        match self {
            IntegerFrame::Small(v) => v.len(),
            IntegerFrame::Big(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn same_point(&self, i: usize, j: usize) -> bool {
        match self {
            IntegerFrame::Small(v) => v[i] == v[j],
            IntegerFrame::Big(v) => v[i] == v[j],
        }
    }

    pub fn orient(&self, i: usize, j: usize, k: usize) -> i8 {
        match self {
            IntegerFrame::Small(v) => orient_sign(&v[i], &v[j], &v[k]),
            IntegerFrame::Big(v) => orient_sign(&v[i], &v[j], &v[k]),
        }
    }

    /// Relation between segments `ab` and `cd`, given by point indices.
    pub fn relation(&self, a: usize, b: usize, c: usize, d: usize) -> SegmentRelation {
        match self {
            IntegerFrame::Small(v) => relation_of(&v[a], &v[b], &v[c], &v[d]),
            IntegerFrame::Big(v) => relation_of(&v[a], &v[b], &v[c], &v[d]),
        }
    }

    pub fn in_segment_interior(&self, p: usize, a: usize, b: usize) -> bool {
        match self {
            IntegerFrame::Small(v) => in_segment_interior(&v[p], &v[a], &v[b]),
            IntegerFrame::Big(v) => in_segment_interior(&v[p], &v[a], &v[b]),
        }
    }
}

/// Counterclockwise hull vertices, without points interior to hull edges.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|p, q| p.lex_cmp(q));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orientation(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Orientation::Counterclockwise
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orientation(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Orientation::Counterclockwise
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Every point is a hull vertex and no three points are collinear.
pub fn in_strictly_convex_position(points: &[Point]) -> bool {
    // the hull drops duplicates and collinear boundary points
    points.len() >= 3 && convex_hull(points).len() == points.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HullLocation {
    Inside,
    Boundary,
    Outside,
}

/// Location of `p` relative to a counterclockwise convex polygon.
pub fn point_vs_hull(p: &Point, hull: &[Point]) -> Result<HullLocation> {
    if hull.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "hull has {} vertices, need at least 3",
            hull.len()
        )));
    }
    let mut on_line = false;
    for i in 0..hull.len() {
        let j = (i + 1) % hull.len();
        match orientation(&hull[i], &hull[j], p) {
            Orientation::Clockwise => return Ok(HullLocation::Outside),
            Orientation::Collinear => on_line = true,
            Orientation::Counterclockwise => {}
        }
    }
    Ok(if on_line { HullLocation::Boundary } else { HullLocation::Inside })
}

/// The three targets in clockwise order as seen from `apex`, starting with the
/// ray that follows the gap of more than 180 degrees.
///
/// Fails with [`Error::NoReflexAngle`] when the apex lies in the closed
/// triangle of the targets, and with [`Error::DegenerateInput`] when a target
/// coincides with the apex or two targets are collinear with it.
pub fn reflex_gap_order(apex: &Point, targets: [&Point; 3]) -> Result<[usize; 3]> {
    for (i, t) in targets.iter().enumerate() {
        if *t == apex {
            return Err(Error::DegenerateInput(format!("target {i} coincides with the apex")));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if orientation(apex, targets[i], targets[j]) == Orientation::Collinear {
                return Err(Error::DegenerateInput(format!(
                    "targets {i} and {j} are collinear with the apex"
                )));
            }
        }
    }
    // apex inside the triangle iff it sees each edge from the same side
    let s0 = orient_sign(targets[0], targets[1], apex);
    let s1 = orient_sign(targets[1], targets[2], apex);
    let s2 = orient_sign(targets[2], targets[0], apex);
    if (s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0) {
        return Err(Error::NoReflexAngle);
    }
    // all rays lie in an open half-plane, so "j is clockwise of i" is a total order
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| {
        if i == j {
            return Ordering::Equal;
        }
        match orientation(apex, targets[i], targets[j]) {
            Orientation::Clockwise => Ordering::Less,
            _ => Ordering::Greater,
        }
    });
    Ok(order)
}

/// Dot product and squared-length product of the rays `apex -> a`, `apex -> b`.
fn angle_terms(apex: &Point, a: &Point, b: &Point) -> Result<(Rational, Rational)> {
    if a == apex || b == apex {
        return Err(Error::DegenerateInput("ray endpoint coincides with its apex".into()));
    }
    let (ux, uy) = a.sub(apex);
    let (vx, vy) = b.sub(apex);
    if (&ux * &vy - &uy * &vx).is_zero() {
        return Err(Error::DegenerateInput("zero or straight angle".into()));
    }
    let dot = &ux * &vx + &uy * &vy;
    let norms = (&ux * &ux + &uy * &uy) * (&vx * &vx + &vy * &vy);
    Ok((dot, norms))
}

/// Decides `angle(ray1a, apex1, ray1b) + angle(ray2a, apex2, ray2b) < 180°`
/// exactly.
///
/// Both angles lie strictly between 0 and 180 degrees, so the sum is below
/// 180 degrees iff `cos θ1 + cos θ2 > 0`; the square roots in the normalized
/// dot products are cleared by squaring once the signs are known.
pub fn angle_sum_below_pi(
    apex1: &Point,
    ray1a: &Point,
    ray1b: &Point,
    apex2: &Point,
    ray2a: &Point,
    ray2b: &Point,
) -> Result<bool> {
    let (d1, n1) = angle_terms(apex1, ray1a, ray1b)?;
    let (d2, n2) = angle_terms(apex2, ray2a, ray2b)?;
    // sign of d1 / sqrt(n1) + d2 / sqrt(n2), i.e. of d1 sqrt(n2) + d2 sqrt(n1)
    let nonneg1 = !d1.is_negative();
    let nonneg2 = !d2.is_negative();
    Ok(match (nonneg1, nonneg2) {
        (true, true) => !(d1.is_zero() && d2.is_zero()),
        (false, false) => false,
        (true, false) => &d1 * &d1 * &n2 > &d2 * &d2 * &n1,
        (false, true) => &d2 * &d2 * &n1 > &d1 * &d1 * &n2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(p(a.0, a.1), p(b.0, b.1)).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Counterclockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 1)), Orientation::Clockwise);
    }

    #[test]
    fn segment_relation_examples() {
        use SegmentRelation::*;
        assert_eq!(segment_relation(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))), ProperCrossing);
        assert_eq!(segment_relation(&seg((0, 0), (1, 0)), &seg((1, 0), (2, 1))), SharedEndpoint);
        assert_eq!(segment_relation(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))), Overlapping);
        assert_eq!(segment_relation(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 5))), Touching);
        assert_eq!(segment_relation(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))), Disjoint);
        assert_eq!(segment_relation(&seg((0, 0), (1, 0)), &seg((1, 0), (2, 0))), SharedEndpoint);
        assert_eq!(segment_relation(&seg((0, 0), (0, 2)), &seg((0, 1), (0, 3))), Overlapping);
        assert_eq!(segment_relation(&seg((0, 0), (2, 0)), &seg((0, 0), (1, 0))), Overlapping);
        assert_eq!(segment_relation(&seg((0, 0), (1, 1)), &seg((3, 0), (2, 5))), Disjoint);
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert!(Segment::new(p(1, 1), p(1, 1)).is_err());
    }

    #[test]
    fn hull_examples() {
        let sq = [p(0, 0), p(2, 0), p(2, 2), p(0, 2), p(1, 1)];
        assert_eq!(convex_hull(&sq), vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        let tri = [p(0, 0), p(3, 1), p(1, 4)];
        assert_eq!(convex_hull(&tri).len(), 3);
        let line = [p(0, 0), p(1, 1), p(2, 2)];
        assert_eq!(convex_hull(&line), vec![p(0, 0), p(2, 2)]);
        assert_eq!(convex_hull(&[p(5, 5)]), vec![p(5, 5)]);
        let with_edge_point = [p(0, 0), p(2, 0), p(1, 0), p(2, 2), p(0, 2)];
        assert_eq!(convex_hull(&with_edge_point).len(), 4);
    }

    #[test]
    fn convex_position_examples() {
        // pentagon with integer coordinates
        let pent = [p(0, 10), p(10, 3), p(6, -8), p(-6, -8), p(-10, 3)];
        assert!(in_strictly_convex_position(&pent));
        let sq_center = [p(0, 0), p(2, 0), p(2, 2), p(0, 2), p(1, 1)];
        assert!(!in_strictly_convex_position(&sq_center));
        let sq_mid = [p(0, 0), p(2, 0), p(2, 2), p(0, 2), p(1, 0)];
        assert!(!in_strictly_convex_position(&sq_mid));
    }

    #[test]
    fn hull_location_examples() {
        let sq = convex_hull(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        assert_eq!(point_vs_hull(&p(1, 1), &sq).unwrap(), HullLocation::Inside);
        let unit = convex_hull(&[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]);
        assert_eq!(point_vs_hull(&p(2, 0), &unit).unwrap(), HullLocation::Outside);
        assert_eq!(point_vs_hull(&p(1, 0), &sq).unwrap(), HullLocation::Boundary);
        assert!(matches!(point_vs_hull(&p(0, 0), &[p(0, 0), p(1, 1)]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn reflex_gap_examples() {
        let targets = [p(-1, 0), p(0, 1), p(1, 0)];
        let order = reflex_gap_order(&p(0, -10), [&targets[0], &targets[1], &targets[2]]).unwrap();
        // seen from below, clockwise runs from the left target to the right one
        assert_eq!(order, [0, 1, 2]);
        let centroid = Point::new(rational(0, 1), rational(1, 3));
        assert!(matches!(
            reflex_gap_order(&centroid, [&targets[0], &targets[1], &targets[2]]),
            Err(Error::NoReflexAngle)
        ));
        let collinear = [p(1, 0), p(2, 0), p(0, 1)];
        assert!(matches!(
            reflex_gap_order(&p(0, 0), [&collinear[0], &collinear[1], &collinear[2]]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn angle_sum_examples() {
        let o = p(0, 0);
        // 60 degrees is not rational, so use two angles summing to less than 180:
        // 45 + 45
        assert!(angle_sum_below_pi(&o, &p(1, 0), &p(1, 1), &o, &p(1, 0), &p(1, 1)).unwrap());
        // 90 + 90
        assert!(!angle_sum_below_pi(&o, &p(1, 0), &p(0, 1), &o, &p(0, 1), &p(-1, 0)).unwrap());
        // 45 + ~170.07 = ~215
        let wide = p(-1000, 175);
        let deg = |(x, y): (f64, f64)| y.atan2(x).to_degrees();
        assert!((deg(wide.to_f64()) - 170.07).abs() < 0.01);
        assert!(!angle_sum_below_pi(&o, &p(1, 0), &p(1, 1), &o, &p(1, 0), &wide).unwrap());
        // zero and straight angles are rejected
        assert!(angle_sum_below_pi(&o, &p(1, 0), &p(2, 0), &o, &p(1, 0), &p(1, 1)).is_err());
        assert!(angle_sum_below_pi(&o, &p(1, 0), &p(-2, 0), &o, &p(1, 0), &p(1, 1)).is_err());
    }

    #[test]
    fn sixty_degree_angles_approximated() {
        // rational points within 1e-6 degrees of 60: cos = 1/2, sin ~ sqrt(3)/2
        let o = p(0, 0);
        let a = Point::new(int(1), rational(0, 1));
        let b = Point::new(rational(1, 2), rational(866025, 1000000));
        assert!(angle_sum_below_pi(&o, &a, &b, &o, &a, &b).unwrap());
    }

    /// Intersection of `ab` and `cd` from the parametric form `a + s(b-a) = c + u(d-c)`.
    fn parametric_oracle(a: &Point, b: &Point, c: &Point, d: &Point) -> SegmentRelation {
        let zero = int(0);
        let one = int(1);
        let (rx, ry) = b.sub(a);
        let (qx, qy) = d.sub(c);
        let (wx, wy) = c.sub(a);
        let den = &rx * &qy - &ry * &qx;
        if !den.is_zero() {
            let s = (&wx * &qy - &wy * &qx) / &den;
            let u = (&wx * &ry - &wy * &rx) / &den;
            if s < zero || s > one || u < zero || u > one {
                return SegmentRelation::Disjoint;
            }
            let s_end = s == zero || s == one;
            let u_end = u == zero || u == one;
            return match (s_end, u_end) {
                (false, false) => SegmentRelation::ProperCrossing,
                (true, true) => SegmentRelation::SharedEndpoint,
                _ => SegmentRelation::Touching,
            };
        }
        // parallel: collinear iff c - a is parallel to b - a
        if !(&wx * &ry - &wy * &rx).is_zero() {
            return SegmentRelation::Disjoint;
        }
        // parameters of c and d along ab
        let len2 = &rx * &rx + &ry * &ry;
        let sc = (&wx * &rx + &wy * &ry) / &len2;
        let (dx, dy) = d.sub(a);
        let sd = (&dx * &rx + &dy * &ry) / &len2;
        let (lo, hi) = if sc <= sd { (sc, sd) } else { (sd, sc) };
        let lo = if lo > zero { lo } else { zero.clone() };
        let hi = if hi < one { hi } else { one.clone() };
        match lo.cmp(&hi) {
            Ordering::Less => SegmentRelation::Overlapping,
            Ordering::Equal => SegmentRelation::SharedEndpoint,
            Ordering::Greater => SegmentRelation::Disjoint,
        }
    }

    #[test]
    fn segment_relation_matches_parametric_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // a small lattice forces many collinear, touching and shared-endpoint cases
        for _ in 0..10_000 {
            let mut pt = || Point::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let (a, b, c, d) = (pt(), pt(), pt(), pt());
            if a == b || c == d {
                continue;
            }
            let r1 = relation_of(&a, &b, &c, &d);
            let r2 = relation_of(&c, &d, &a, &b);
            assert_eq!(r1, r2, "asymmetric on {a:?}{b:?} vs {c:?}{d:?}");
            assert_eq!(r1, parametric_oracle(&a, &b, &c, &d), "{a:?}{b:?} vs {c:?}{d:?}");
        }
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (-50i64..50, 1i64..7, -50i64..50, 1i64..7)
            .prop_map(|(a, b, c, d)| Point::new(rational(a, b), rational(c, d)))
    }

    proptest! {
        #[test]
        fn orientation_antisymmetric_and_invariant(
            pp in arb_point(), q in arb_point(), r in arb_point(),
            dx in -20i64..20, dy in -20i64..20, s in 1i64..9, sd in 1i64..5,
        ) {
            let o = orientation(&pp, &q, &r);
            let swapped = orientation(&pp, &r, &q);
            let expect = match o {
                Orientation::Clockwise => Orientation::Counterclockwise,
                Orientation::Counterclockwise => Orientation::Clockwise,
                Orientation::Collinear => Orientation::Collinear,
            };
            prop_assert_eq!(swapped, expect);
            let (dx, dy, s) = (int(dx), int(dy), rational(s, sd));
            let t = |x: &Point| x.translate(&dx, &dy).scale(&s);
            prop_assert_eq!(orientation(&t(&pp), &t(&q), &t(&r)), o);
        }

        #[test]
        fn hull_contains_positive_combinations(
            pts in proptest::collection::vec(arb_point(), 3..8),
            weights in proptest::collection::vec(1i64..20, 8),
        ) {
            let hull = convex_hull(&pts);
            prop_assume!(hull.len() >= 3);
            let total: i64 = weights[..pts.len()].iter().sum();
            let mut x = int(0);
            let mut y = int(0);
            for (pt, &w) in pts.iter().zip(&weights) {
                x += &pt.x * rational(w, total);
                y += &pt.y * rational(w, total);
            }
            // a combination with all weights positive of points spanning a 2D hull is interior
            prop_assert_eq!(point_vs_hull(&Point::new(x, y), &hull).unwrap(), HullLocation::Inside);
        }
    }

    #[test]
    fn angle_sum_matches_float_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 10_000 {
            let mut pt = || Point::from_ints(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
            let (o1, a1, b1, o2, a2, b2) = (pt(), pt(), pt(), pt(), pt(), pt());
            let angle = |o: &Point, a: &Point, b: &Point| {
                let (ox, oy) = o.to_f64();
                let (ax, ay) = a.to_f64();
                let (bx, by) = b.to_f64();
                let (ux, uy, vx, vy) = (ax - ox, ay - oy, bx - ox, by - oy);
                (ux * vy - uy * vx).atan2(ux * vx + uy * vy).abs()
            };
            let (Ok(r), t1, t2) = (
                angle_sum_below_pi(&o1, &a1, &b1, &o2, &a2, &b2),
                angle(&o1, &a1, &b1),
                angle(&o2, &a2, &b2),
            ) else {
                continue;
            };
            let sum = t1 + t2;
            if (sum - std::f64::consts::PI).abs() < 1e-6 {
                continue;
            }
            assert_eq!(r, sum < std::f64::consts::PI);
            checked += 1;
        }
    }
}

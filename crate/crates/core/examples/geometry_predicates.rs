//! Exact orientation and segment-relation predicates on rational points.

use thickness::geometry::{
    angle_sum_below_pi, in_strictly_convex_position, orientation, rational, segment_relation, Point, Segment,
};

fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
    Segment::new(Point::from_ints(a.0, a.1), Point::from_ints(b.0, b.1)).expect("distinct endpoints")
}

fn main() {
    let p = Point::from_ints(0, 0);
    let q = Point::from_ints(3, 1);
    let r = Point::new(rational(3, 2), rational(1, 2));
    println!("orientation of (0,0), (3,1), (3/2,1/2): {:?}", orientation(&p, &q, &r));
    println!("orientation of (0,0), (3,1), (0,1): {:?}", orientation(&p, &q, &Point::from_ints(0, 1)));

    let cases = [
        ("proper crossing", seg((0, 0), (4, 4)), seg((0, 4), (4, 0))),
        ("shared endpoint", seg((0, 0), (4, 4)), seg((4, 4), (8, 0))),
        ("touching", seg((0, 0), (4, 0)), seg((2, 0), (2, 3))),
        ("overlapping", seg((0, 0), (4, 0)), seg((2, 0), (6, 0))),
        ("disjoint", seg((0, 0), (1, 1)), seg((3, 0), (4, 1))),
    ];
    for (name, s, t) in &cases {
        println!("{name:>16}: {:?}", segment_relation(s, t));
    }

    let square: Vec<Point> = [(0, 0), (4, 0), (4, 4), (0, 4)].iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
    let mut with_mid = square.clone();
    with_mid.push(Point::from_ints(2, 0));
    println!("square in strictly convex position: {}", in_strictly_convex_position(&square));
    println!("square plus edge midpoint: {}", in_strictly_convex_position(&with_mid));

    // two right angles sum to exactly 180 degrees, which is not below
    let o = Point::from_ints(0, 0);
    let (x, y) = (Point::from_ints(1, 0), Point::from_ints(0, 1));
    let sum = angle_sum_below_pi(&o, &x, &y, &o, &x, &y).expect("non-degenerate angles");
    println!("90 + 90 below 180: {sum}");
}

//! Exhaustive lattice search for outer drawings of a given tripleton type.
//! Usage: refute_outer_types [n] [type] [resolution]

use thickness::classify::TripletonType;
use thickness::search::{refute_outer_type, RefuteStrategy};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let ty: TripletonType = args.next().unwrap_or_else(|| "201".into()).parse().expect("type like 201");
    let resolution: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let r = refute_outer_type(n, ty, RefuteStrategy { resolution }, 50_000_000).expect("3 <= n <= 8");
    for l in &r.layouts {
        println!(
            "{:>14}: candidates {:?}, {} combinations, complete = {}, witness = {}",
            l.name, l.candidates_per_tripleton, l.combinations, l.complete, l.witness_found
        );
    }
    println!("forced in every layout: {:?}", r.forced_everywhere);
    println!("witness layouts: {:?}", r.witness_layouts);
}

//! Classifies the two hexagon fixtures: convexity, coherence, inner/outer
//! position, tripleton types and the character of the low-high crossing.

use thickness::classify::{classify, crossing_character, CrossingCharacter, SingletonNumbering};
use thickness::construct::two_tripleton_inner_fixture;

fn main() {
    for ch in [CrossingCharacter::Convex, CrossingCharacter::Concave] {
        let d = two_tripleton_inner_fixture(ch);
        let r = classify(&d, 0).expect("singletons in convex position");
        println!("{ch:?} fixture, tripletons at {:?} and {:?}", d.coords()[6], d.coords()[7]);
        println!("  convex = {}, coherent = {}, coherent starts {:?}", r.convex, r.coherent, r.coherent_starts);
        println!("  {:?}, roles {:?}", r.inner_outer, r.roles);
        println!("  types {:?}, drawing type {}", r.types, r.drawing_type);
        let found = crossing_character(&d, &SingletonNumbering::identity(6), 6, 7).expect("coherent inner drawing");
        println!("  crossing character {found:?}");
    }
}

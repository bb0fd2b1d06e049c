//! Exact book thickness of small graphs by enumerating vertex orders.

use thickness::drawing::book_crossings;
use thickness::graph::Graph;
use thickness::search::book_thickness_exact;

fn main() {
    let graphs = [
        ("C6", Graph::cycle(6)),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("cube", Graph::cube()),
        ("K7", Graph::complete(7)),
    ];
    for (name, g) in &graphs {
        let r = book_thickness_exact(g, 6, false).expect("small graph");
        let layout = r.layout.as_ref().expect("within the cap");
        println!(
            "{name:>5}: {:?} pages after {} orders, spine {:?}, crossings {}",
            r.pages,
            r.orders_examined,
            layout.order(),
            book_crossings(layout).len()
        );
    }
}

//! Graph primitives: complements, chordality, chordless cycles and induced
//! matchings in graphs with loops.

use syzygraph::graph::{
    count_induced_matchings, enumerate_induced_cycles, induced_matchings, is_chordal,
    lex_bfs_order, shortest_induced_cycle_at_least, LoopGraph, SimpleGraph, VertexSet,
};

pub fn run() -> bool {
    let mut ok = true;

    let g = LoopGraph::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
    let c = g.complement();
    println!("G edges {:?}\nG^c edges {:?}", g.edges(), c.edges());
    let sub = g
        .induced_subgraph(&VertexSet::from_labels(5, [1, 2, 4]).unwrap())
        .unwrap();
    println!("G on {{1,2,4}}: {:?}", sub.edges());
    ok &= sub.edges() == [(1, 1), (1, 4), (2, 4)];

    let matchings = induced_matchings(&g, 2);
    println!(
        "induced 2-matchings of G: {:?}",
        matchings.iter().map(|m| m.edges()).collect::<Vec<_>>()
    );
    ok &= count_induced_matchings(&g, 1) == g.edge_count() as u64;

    // An unchosen loop on a vertex next to a chosen edge does not spoil inducedness.
    let h = LoopGraph::new(4, [(1, 2), (3, 4), (2, 2)]).unwrap();
    let hm: Vec<_> = induced_matchings(&h, 2)
        .iter()
        .map(|m| m.edges().to_vec())
        .collect();
    println!("x1x2, x3x4, x2^2: {hm:?}");
    ok &= hm.len() == 2;

    for n in 4..=7 {
        let cyc = SimpleGraph::cycle(n).unwrap();
        println!(
            "C{n}: chordal {}, Lex-BFS {:?}, shortest chordless cycle >= 4: {:?}",
            is_chordal(&cyc),
            lex_bfs_order(&cyc),
            shortest_induced_cycle_at_least(&cyc, 4)
        );
        ok &= !is_chordal(&cyc) && enumerate_induced_cycles(&cyc, n).len() == 1;
    }
    ok &= enumerate_induced_cycles(&c, 4).is_empty();
    ok &= shortest_induced_cycle_at_least(&c, 5) == Some(5);
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

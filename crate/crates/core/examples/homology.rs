//! Clique complexes and reduced homology over different fields.

use syzygraph::graph::SimpleGraph;
use syzygraph::oracle::{clique_complex, reduced_homology_dims, ExactField, SimplicialComplex};

pub fn run() -> bool {
    let fields = [
        ExactField::Rationals,
        ExactField::Prime(2),
        ExactField::Prime(3),
    ];
    let mut ok = true;

    let c4 = clique_complex(&SimpleGraph::cycle(4).unwrap()).unwrap();
    println!(
        "C4: f-vector {:?}, H~ {:?}",
        c4.f_vector(),
        reduced_homology_dims(&c4, fields[0])
    );
    ok &= reduced_homology_dims(&c4, fields[0]) == [0, 0, 1];

    let matching = SimpleGraph::new(6, [(1, 2), (3, 4), (5, 6)]).unwrap();
    let octahedron = clique_complex(&matching.complement()).unwrap();
    println!(
        "octahedron: f-vector {:?}, H~ {:?}",
        octahedron.f_vector(),
        reduced_homology_dims(&octahedron, fields[0])
    );
    ok &= reduced_homology_dims(&octahedron, fields[0]) == [0, 0, 0, 1];

    // Six-vertex real projective plane: torsion shows up only in characteristic 2.
    let rp2 = SimplicialComplex::from_facets(
        6,
        [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 6, 2],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 2],
            [5, 6, 3],
            [6, 2, 4],
        ],
    )
    .unwrap();
    for f in fields {
        let dims = reduced_homology_dims(&rp2, f);
        println!("RP^2 over {f}: H~ {dims:?}");
        ok &= (dims == [0, 0, 1, 1]) == (f == ExactField::Prime(2));
    }
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

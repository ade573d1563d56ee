//! The five-variable ideal (x1^2, x1x3, x3x5, x5x2, x2x4, x4x1): its graph,
//! the first nonlinear syzygy read off the graph, and the full Betti diagram
//! from the homology oracle over two fields.

use syzygraph::analysis::{classify_first_nonlinear, NonlinearClassification};
use syzygraph::ideal::MonomialIdeal;
use syzygraph::oracle::{ExactField, HochsterOracle};

pub const DIAGRAM: &str = "  | 0 1 2 3\n--+--------\n2 | 6 7 1 -\n3 | - 1 3 1\n";

pub fn run() -> bool {
    let ideal = MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)])
        .expect("valid generators");
    let graph = ideal.to_graph();
    println!("I = {ideal}");
    println!("complement edges: {:?}", graph.complement().edges());

    let class = classify_first_nonlinear(&ideal);
    let witness_ok = match &class {
        NonlinearClassification::FirstStepOne { beta14, witnesses } => {
            println!("beta_1,4 = {beta14}, witness {:?}", witnesses[0].edges());
            *beta14 == 1 && witnesses[0].edges() == [(1, 1), (2, 5)]
        }
        other => {
            println!("unexpected classification {other:?}");
            false
        }
    };

    let mut ok = witness_ok;
    for field in [ExactField::Rationals, ExactField::Prime(2)] {
        let table = HochsterOracle::new(field)
            .graded_betti(&ideal)
            .expect("six variables after polarization");
        println!("over {field}:\n{table}");
        ok &= table.diagram() == DIAGRAM;
    }
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

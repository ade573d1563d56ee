//! The three cases for where nonlinear syzygies first appear, each checked
//! against the oracle.

use syzygraph::analysis::{classify_first_nonlinear, first_step_in_row, predicted_multidegrees};
use syzygraph::graph::SimpleGraph;
use syzygraph::ideal::MonomialIdeal;
use syzygraph::oracle::{ExactField, HochsterOracle};

fn from_complement(c: &SimpleGraph) -> MonomialIdeal {
    MonomialIdeal::from_graph(&c.complement().to_loop_graph()).expect("nonempty")
}

fn report(name: &str, ideal: &MonomialIdeal) -> bool {
    let class = classify_first_nonlinear(ideal);
    let table = HochsterOracle::new(ExactField::Rationals)
        .graded_betti(ideal)
        .expect("within the cap");
    let oracle_i3 = first_step_in_row(&table, 3);
    let oracle_beta = table.get(oracle_i3, oracle_i3 + 3);
    println!(
        "{name}: {} i3 = {} beta = {} | oracle i3 = {oracle_i3} beta = {}",
        class.name(),
        class.i3(),
        class.beta(),
        if oracle_i3 == 0 {
            "0".to_string()
        } else {
            oracle_beta.to_string()
        }
    );
    oracle_i3 == class.i3() && (oracle_i3 == 0 || oracle_beta == class.beta().into())
}

pub fn run() -> bool {
    let mut ok = true;

    // Two disjoint edges: nonlinear already at step 1.
    let two_edges = MonomialIdeal::new(4, [(1, 2), (3, 4)]).unwrap();
    ok &= report("x1x2, x3x4", &two_edges);

    // A chordal complement and no induced 2K2: linear resolution.
    let path_complement = from_complement(&SimpleGraph::path(5).unwrap());
    ok &= report("complement of P5", &path_complement);

    // Complement a 7-cycle: nonlinear from step 4 on.
    ok &= report(
        "complement of C7",
        &MonomialIdeal::cycle_complement(7).unwrap(),
    );

    // Complement two disjoint 5-cycles: two multidegrees at step 2.
    let two_cycles = SimpleGraph::new(
        10,
        (1..=5)
            .map(|v| (v, v % 5 + 1))
            .chain((6..=10).map(|v| (v, (v - 5) % 5 + 6))),
    )
    .unwrap();
    let ideal = from_complement(&two_cycles);
    ok &= report("complement of C5 + C5", &ideal);
    let predicted = predicted_multidegrees(&ideal).expect("first step 2");
    let mg = HochsterOracle::new(ExactField::Rationals)
        .multigraded_betti(&ideal)
        .expect("ten variables");
    let carried: Vec<Vec<usize>> = mg
        .iter()
        .filter(|&(i, s, _)| i <= 2 && s.len() == 5)
        .map(|(_, s, _)| s.to_vec())
        .collect();
    println!("  predicted multidegrees {predicted:?}, oracle {carried:?}");
    ok &= carried == predicted && predicted.iter().all(|m| mg.get(2, m) == 1);
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

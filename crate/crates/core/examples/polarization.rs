//! Squares become whiskers under polarization; graded Betti numbers do not
//! change, and multigraded ones are reported on the polarized variables.

use syzygraph::ideal::{MonomialIdeal, Multidegree};
use syzygraph::oracle::{ExactField, HochsterOracle};

pub fn run() -> bool {
    let ideal = MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
    let pol = ideal.polarize();
    println!(
        "{ideal} polarizes to {} on {} variables",
        pol.ideal,
        pol.ideal.num_vars()
    );
    println!(
        "fresh variables (new, original): {:?}",
        pol.fresh_variables()
    );

    let oracle = HochsterOracle::new(ExactField::Rationals);
    let same = oracle.graded_betti(&ideal).unwrap() == oracle.graded_betti(&pol.ideal).unwrap();
    println!("graded Betti numbers unchanged: {same}");

    let mg = oracle.multigraded_betti(&ideal).unwrap();
    for (i, s, v) in mg.iter().filter(|&(i, _, _)| i >= 2) {
        println!("  beta_{i},{s:?} = {v}");
    }

    let s = Multidegree::new(vec![1, 1, 1, 1, 1]);
    let restricted = ideal.restrict(&s).unwrap();
    println!("restricted to x1x2x3x4x5: {restricted}");
    let consistent = oracle
        .restriction_consistency_check(&pol.ideal, &Multidegree::squarefree(6, [1, 2, 4, 5]))
        .unwrap();
    println!("restriction keeps multigraded numbers: {consistent}");
    same && consistent && restricted.num_generators() == 5 && mg.variable_map() == [(6, 1)]
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

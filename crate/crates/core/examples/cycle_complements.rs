//! Ideals whose graph is the complement of an n-cycle: the closed formula
//! for the whole Betti table against the oracle, and its symmetry.

use syzygraph::analysis::cycle_complement_betti;
use syzygraph::ideal::MonomialIdeal;
use syzygraph::oracle::{ExactField, HochsterOracle};

pub fn run() -> bool {
    let mut ok = true;
    for n in 4..=9 {
        let ideal = MonomialIdeal::cycle_complement(n).expect("n >= 4");
        let predicted = cycle_complement_betti(n).expect("n >= 4");
        let strand = predicted.row(2);
        let strand = &strand[..=n - 4];
        let symmetric = strand.iter().eq(strand.iter().rev());
        let mut agree = true;
        for field in [ExactField::Rationals, ExactField::Prime(2)] {
            agree &= HochsterOracle::new(field)
                .graded_betti(&ideal)
                .expect("n <= 16")
                == predicted;
        }
        let strand: Vec<String> = strand.iter().map(ToString::to_string).collect();
        println!(
            "n = {n}: linear strand [{}], beta_{},{} = {}, oracle agrees: {agree}, symmetric: {symmetric}",
            strand.join(", "),
            n - 3,
            n,
            predicted.get(n - 3, n)
        );
        ok &= agree && symmetric;
    }
    let big = cycle_complement_betti(64).expect("n >= 4");
    println!("n = 64: beta_30,32 = {}", big.get(30, 32));
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

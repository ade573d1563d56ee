//! Linear presentation tested three ways, and the squarefree part of a
//! linearly presented ideal with squares.

use syzygraph::analysis::{first_step_in_row, linear_presentation_routes};
use syzygraph::ideal::MonomialIdeal;
use syzygraph::oracle::{ExactField, HochsterOracle};

pub fn run() -> bool {
    let oracle = HochsterOracle::new(ExactField::Rationals);
    let cases = [
        MonomialIdeal::new(3, [(1, 2), (2, 3)]).unwrap(),
        MonomialIdeal::new(4, [(1, 2), (3, 4)]).unwrap(),
        MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap(),
        MonomialIdeal::new(3, [(1, 1), (2, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
        MonomialIdeal::new(
            6,
            [
                (1, 1),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 6),
                (1, 6),
                (1, 2),
            ],
        )
        .unwrap(),
    ];
    let mut ok = true;
    for ideal in &cases {
        let routes = linear_presentation_routes(ideal);
        let table = oracle.graded_betti(ideal).unwrap();
        let oracle_says = table.get(1, 4) == 0u32.into();
        println!(
            "{ideal}: no 2K2 {}, generator conditions {}, edge graph diameter {}, oracle {oracle_says}",
            routes.no_induced_matching, routes.generator_conditions, routes.diameter
        );
        ok &= routes.consistent() && routes.value() == oracle_says;
        if routes.value() && !ideal.is_squarefree() {
            let sq = ideal.squarefree_part().unwrap();
            let ts = oracle.graded_betti(&sq).unwrap();
            println!(
                "  squarefree part {sq}: i3 = {} vs {}",
                first_step_in_row(&ts, 3),
                first_step_in_row(&table, 3)
            );
            ok &= first_step_in_row(&ts, 3) == first_step_in_row(&table, 3);
        }
    }
    ok
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

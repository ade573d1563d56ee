//! Counting induced subgraphs of a cycle by size and number of components,
//! and the binomial identity behind the cycle-complement formula.

use syzygraph::analysis::{binomial_identity_check, binomial_identity_sides};
use syzygraph::graph::{count_cycle_subgraphs, SimpleGraph, VertexSet};

fn brute_force(n: usize, i: usize, k: usize) -> u64 {
    let cycle = SimpleGraph::cycle(n).unwrap();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == i)
        .filter(|&m| {
            let s = VertexSet::from_labels(n, (1..=n).filter(|v| m >> (v - 1) & 1 == 1)).unwrap();
            cycle.induced_subgraph(&s).unwrap().components().len() == k
        })
        .count() as u64
}

pub fn run() -> bool {
    let mut ok = true;
    let mut checked = 0;
    for n in 3..=10 {
        for i in 1..n {
            for k in 1..=i {
                let formula = count_cycle_subgraphs(n as u64, i as u64, k as u64).unwrap();
                ok &= formula == brute_force(n, i, k).into();
                checked += 1;
            }
        }
    }
    println!(
        "induced subgraphs of C_n, n <= 10: {checked} (n, i, k) triples checked, all equal: {ok}"
    );

    let (lhs, rhs) = binomial_identity_sides(5, 2).unwrap();
    println!("m = 5, a = 2: {lhs} = {rhs}");
    let all = (2..=30).all(|m| (1..m).all(|a| binomial_identity_check(m, a).unwrap()));
    println!("identity holds for 1 <= a < m <= 30: {all}");
    ok && all
}

#[allow(dead_code)]
fn main() {
    if !run() {
        std::process::exit(1);
    }
}

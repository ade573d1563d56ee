use proptest::prelude::*;

use syzygraph::analysis::{binomial_identity_check, cycle_complement_betti};
use syzygraph::graph::{
    count_cycle_subgraphs, count_induced_matchings, enumerate_induced_cycles, is_chordal,
    min_degree_one_cycle_check, shortest_induced_cycle_at_least, LoopGraph, SimpleGraph, VertexSet,
};
use syzygraph::ideal::{MonomialIdeal, Multidegree};
use syzygraph::io::{parse_str, to_graph_format, to_ideal_format};

fn loop_graph(max_n: usize) -> impl Strategy<Value = LoopGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p);
            LoopGraph::new(n, edges).unwrap()
        })
    })
}

fn simple_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p);
            SimpleGraph::new(n, edges).unwrap()
        })
    })
}

fn ideal(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
    loop_graph(max_n)
        .prop_filter("nonempty", |g| g.edge_count() > 0)
        .prop_map(|g| MonomialIdeal::from_graph(&g).unwrap())
}

/// Chordless cycle of length >= 4 by checking every vertex subset.
fn brute_has_long_hole(g: &SimpleGraph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|m| {
        let s: Vec<usize> = (1..=n).filter(|v| m >> (v - 1) & 1 == 1).collect();
        s.len() >= 4
            && s.iter()
                .all(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count() == 2)
            && g.induced_subgraph(&VertexSet::from_labels(n, s.iter().copied()).unwrap())
                .unwrap()
                .components()
                .len()
                == 1
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in loop_graph(10)) {
        let s = g.strip_loops();
        prop_assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn chordality_matches_brute_force(g in simple_graph(1, 9)) {
        prop_assert_eq!(is_chordal(&g), !brute_has_long_hole(&g));
        prop_assert_eq!(is_chordal(&g), shortest_induced_cycle_at_least(&g, 4).is_none());
    }

    #[test]
    fn induced_cycles_are_canonical_and_distinct(g in simple_graph(3, 9), r in 3usize..=9) {
        let cycles = enumerate_induced_cycles(&g, r);
        for c in &cycles {
            prop_assert!(c.is_induced_in(&g));
            prop_assert_eq!(c.len(), r);
        }
        for w in cycles.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn degree_one_vertices_avoid_long_holes(g in simple_graph(2, 8)) {
        for v in 1..=g.n() {
            if g.degree(v) == 1 {
                prop_assert!(min_degree_one_cycle_check(&g, v).unwrap());
                let c = g.complement();
                for r in 5..=g.n() {
                    prop_assert!(enumerate_induced_cycles(&c, r).iter().all(|cy| !cy.contains(v)));
                }
            }
        }
    }

    #[test]
    fn single_edges_are_induced_matchings(g in loop_graph(10)) {
        prop_assert_eq!(count_induced_matchings(&g, 1), g.edge_count() as u64);
    }

    #[test]
    fn graph_round_trip(g in loop_graph(10)) {
        prop_assume!(g.edge_count() > 0);
        prop_assert_eq!(MonomialIdeal::from_graph(&g).unwrap().to_graph(), g);
    }

    #[test]
    fn polarization_replaces_loops_by_whiskers(i in ideal(8)) {
        let pol = i.polarize();
        let squares: Vec<usize> = i.squares().collect();
        prop_assert!(pol.ideal.is_squarefree());
        prop_assert_eq!(pol.new_vars(), squares.len());
        prop_assert_eq!(pol.ideal.num_generators(), i.num_generators());
        let g = pol.ideal.to_graph().strip_loops();
        for (new, orig) in pol.fresh_variables() {
            prop_assert_eq!(g.degree(new), 1);
            prop_assert!(g.has_edge(new, orig));
        }
    }

    #[test]
    fn restriction_laws(i in ideal(7), exps in proptest::collection::vec(0u32..=2, 7)) {
        let s = Multidegree::new(exps[..i.num_vars()].to_vec());
        if let Ok(r) = i.restrict(&s) {
            prop_assert!(r.generators().iter().all(|&(a, b)| i.contains(a, b)));
            prop_assert_eq!(r.restrict(&s).unwrap(), r.clone());
            if s.is_squarefree() {
                let sub = i.to_graph().induced_subgraph(&s.support()).unwrap();
                let edges: Vec<_> = sub.edges().into_iter().filter(|&(a, b)| a != b).collect();
                prop_assert_eq!(r.generators(), edges.as_slice());
            }
        }
        let full = Multidegree::new(vec![2; i.num_vars()]);
        prop_assert_eq!(i.restrict(&full).unwrap(), i);
    }

    #[test]
    fn files_round_trip(i in ideal(12)) {
        prop_assert_eq!(parse_str(&to_ideal_format(&i)).unwrap(), i.clone());
        prop_assert_eq!(parse_str(&to_graph_format(&i).replace('\n', "\r\n")).unwrap(), i);
    }
}

#[test]
fn cycle_subgraph_counts_match_enumeration() {
    for n in 3..=10usize {
        let cycle = SimpleGraph::cycle(n).unwrap();
        let mut counts = vec![vec![0u64; n + 1]; n + 1];
        for m in 1u32..1 << n {
            let s = VertexSet::from_labels(n, (1..=n).filter(|v| m >> (v - 1) & 1 == 1)).unwrap();
            let k = cycle.induced_subgraph(&s).unwrap().components().len();
            counts[s.len()][k] += 1;
        }
        for i in 1..n {
            for k in 1..=i {
                let formula = count_cycle_subgraphs(n as u64, i as u64, k as u64).unwrap();
                assert_eq!(formula, counts[i][k].into(), "n={n} i={i} k={k}");
            }
        }
    }
}

#[test]
fn cycle_complement_formula_is_integral() {
    // The division is asserted exact inside; this exercises it.
    for n in 4..=64 {
        let t = cycle_complement_betti(n).unwrap();
        assert_eq!(t.max_step(), Some(n - 3));
        assert_eq!(t.get(0, 2), (n * (n - 3) / 2).into());
    }
}

#[test]
fn binomial_identity_up_to_thirty() {
    for m in 2..=30 {
        for a in 1..m {
            assert!(binomial_identity_check(m, a).unwrap(), "m={m} a={a}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_check_passes_on_random_ideals(i in ideal(7)) {
        prop_assume!(i.polarize().ideal.num_vars() <= 10);
        let fields = syzygraph::verify::verification_fields(None);
        let report = syzygraph::verify::verify_ideal(&i, &fields, 16).unwrap();
        prop_assert!(report.passed(), "{:#?}", report);
    }
}

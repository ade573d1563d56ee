use std::collections::VecDeque;
use std::fmt;

use super::SimpleGraph;
use crate::ideal::MonomialIdeal;

/// Longest shortest-path length; disconnected graphs have infinite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

pub fn diameter(g: &SimpleGraph) -> Diameter {
    let mut best = 0;
    let mut dist = vec![usize::MAX; g.n() + 1];
    for source in g.vertices().iter() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in g.neighbours(v).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    best = best.max(dist[w]);
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached < g.vertices().len() {
            return Diameter::Infinite;
        }
    }
    Diameter::Finite(best)
}

/// Graph on the generators `1..=m` (in the ideal's sorted order) joining two
/// generators when they share a variable.
pub fn edge_graph(ideal: &MonomialIdeal) -> SimpleGraph {
    let gens = ideal.generators();
    let mut edges = Vec::new();
    for (a, &(i, j)) in gens.iter().enumerate() {
        for (b, &(k, l)) in gens.iter().enumerate().skip(a + 1) {
            if i == k || i == l || j == k || j == l {
                edges.push((a + 1, b + 1));
            }
        }
    }
    SimpleGraph::new(gens.len(), edges).expect("generator indices are in range")
}

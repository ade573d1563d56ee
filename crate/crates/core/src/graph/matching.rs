//! Induced matchings in graphs that may carry loops.
//!
//! A loop `(v, v)` is an edge whose vertex set is `{v}`. A set of pairwise
//! vertex-disjoint edges is induced when no other edge joins two distinct
//! vertices of their union. Loops sitting on a vertex of a chosen edge are
//! not counted against inducedness: after polarization such a loop becomes a
//! whisker whose tip lies outside the chosen vertex set.

use std::fmt;

use super::{LoopGraph, VertexSet};

/// `k` pairwise vertex-disjoint edges forming an induced subgraph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedMatching {
    edges: Vec<(usize, usize)>,
}

impl InducedMatching {
    /// Edges `(u, v)` with `u <= v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Union of the endpoint sets.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .edges
            .iter()
            .flat_map(|&(u, v)| if u == v { vec![u] } else { vec![u, v] })
            .collect();
        vs.sort_unstable();
        vs
    }

    /// Re-checks disjointness and inducedness against `g`.
    pub fn is_induced_in(&self, g: &LoopGraph) -> bool {
        let vs = self.vertices();
        let distinct = {
            let mut d = vs.clone();
            d.dedup();
            d.len() == vs.len()
        };
        if !distinct || !self.edges.iter().all(|&(u, v)| g.has_edge(u, v)) {
            return false;
        }
        vs.iter().enumerate().all(|(i, &a)| {
            vs[i + 1..]
                .iter()
                .all(|&b| !g.has_edge(a, b) || self.edges.contains(&(a.min(b), a.max(b))))
        })
    }
}

impl fmt::Debug for InducedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.edges)
    }
}

fn search(
    g: &LoopGraph,
    edges: &[(usize, usize)],
    from: usize,
    k: usize,
    forbidden: &VertexSet,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for idx in from..edges.len() {
        if edges.len() - idx < remaining {
            break;
        }
        let (u, v) = edges[idx];
        if forbidden.contains(u) || forbidden.contains(v) {
            continue;
        }
        let mut next = forbidden.union(g.neighbours(u)).union(g.neighbours(v));
        next.insert(u);
        next.insert(v);
        chosen.push((u, v));
        search(g, edges, idx + 1, k, &next, chosen, emit);
        chosen.pop();
    }
}

/// All induced matchings with exactly `k` edges, sorted. `k = 0` yields the
/// single empty matching.
pub fn induced_matchings(g: &LoopGraph, k: usize) -> Vec<InducedMatching> {
    let mut out = Vec::new();
    let edges = g.edges();
    search(
        g,
        &edges,
        0,
        k,
        &VertexSet::empty(g.n()),
        &mut Vec::new(),
        &mut |m| {
            out.push(InducedMatching { edges: m.to_vec() });
        },
    );
    out
}

/// Number of induced matchings with exactly `k` edges.
pub fn count_induced_matchings(g: &LoopGraph, k: usize) -> u64 {
    let mut count = 0u64;
    let edges = g.edges();
    search(
        g,
        &edges,
        0,
        k,
        &VertexSet::empty(g.n()),
        &mut Vec::new(),
        &mut |_| count += 1,
    );
    count
}

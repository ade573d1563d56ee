//! Graphs on labelled vertices `1..=n`, with and without loops.
//!
//! A [`LoopGraph`] is the generator set of a quadratic monomial ideal: the
//! edge `(i, j)` stands for `x_i x_j` and the loop `(i, i)` for `x_i^2`.
//! Its complement is always a [`SimpleGraph`]. Both kinds carry an explicit
//! vertex set so that induced subgraphs keep their original labels.

mod chordal;
mod counting;
mod cycles;
mod distance;
mod matching;

pub use chordal::{is_chordal, is_perfect_elimination_ordering, lex_bfs_order};
pub use counting::{binomial, count_cycle_subgraphs};
pub use cycles::{
    enumerate_induced_cycles, has_induced_cycle, min_degree_one_cycle_check,
    shortest_induced_cycle_at_least, InducedCycle,
};
pub use distance::{diameter, edge_graph, Diameter};
pub use matching::{count_induced_matchings, induced_matchings, InducedMatching};

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("loop ({0}, {0}) not allowed in a simple graph")]
    LoopInSimpleGraph(usize),
    #[error("vertex {vertex} has degree {degree}, expected 1")]
    NotDegreeOne { vertex: usize, degree: usize },
    #[error("parameters out of range: {0}")]
    Parameters(String),
}

/// A set of vertex labels drawn from `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from 1-based labels, rejecting labels outside `1..=n`.
    pub fn from_labels<I>(n: usize, labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = VertexSet::empty(n);
        for v in labels {
            if v == 0 || v > n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Label bound `n` this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && self.bits.contains(v - 1)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v - 1, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Labels in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones().map(|b| b + 1)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn check_vertex(v: usize, n: usize) -> Result<(), GraphError> {
    if v == 0 || v > n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Graph on labels `1..=n` whose edges may include loops `(v, v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopGraph {
    vertices: VertexSet,
    /// `adj[v-1]` holds the neighbours of `v` other than `v` itself.
    adj: Vec<VertexSet>,
    loops: VertexSet,
}

impl LoopGraph {
    /// Graph on the full vertex set `1..=n`. Endpoints may be given in
    /// either order; listing the same edge twice is an error.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut g = LoopGraph {
            vertices: VertexSet::full(n),
            adj: vec![VertexSet::empty(n); n],
            loops: VertexSet::empty(n),
        };
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            let (u, v) = ordered(u, v);
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            self.loops.insert(u);
        } else {
            self.adj[u - 1].insert(v);
            self.adj[v - 1].insert(u);
        }
    }

    /// Label bound.
    pub fn n(&self) -> usize {
        self.vertices.universe()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops.contains(u)
        } else {
            self.adj
                .get(u.wrapping_sub(1))
                .is_some_and(|nb| nb.contains(v))
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    /// Vertices carrying a loop (the "square vertices").
    pub fn loop_vertices(&self) -> &VertexSet {
        &self.loops
    }

    /// Neighbours of `v` excluding `v` itself, even when `v` has a loop.
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v - 1]
    }

    /// Edges `(u, v)` with `u <= v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in self.vertices.iter() {
            if self.loops.contains(u) {
                out.push((u, u));
            }
            out.extend(self.adj[u - 1].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.loops.len() + self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_simple(&self) -> bool {
        self.loops.is_empty()
    }

    /// The same graph with every loop dropped.
    pub fn strip_loops(&self) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.clone(),
            adj: self.adj.clone(),
        }
    }

    /// Simple complement on the same vertex set; loops play no role.
    pub fn complement(&self) -> SimpleGraph {
        self.strip_loops().complement()
    }

    /// Subgraph on `s` with every edge (loops included) internal to `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<LoopGraph, GraphError> {
        let s = restrict_labels(s, &self.vertices)?;
        Ok(LoopGraph {
            adj: restrict_adj(&self.adj, &s),
            loops: self.loops.intersection(&s),
            vertices: s,
        })
    }
}

impl fmt::Debug for LoopGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoopGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Loopless graph on labels `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: VertexSet,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(GraphError::LoopInSimpleGraph(u));
            }
            let (u, v) = ordered(u, v);
            if adj[u - 1].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u - 1].insert(v);
            adj[v - 1].insert(u);
        }
        Ok(SimpleGraph {
            vertices: VertexSet::full(n),
            adj,
        })
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        SimpleGraph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        SimpleGraph::new(n, edges)
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Parameters(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        SimpleGraph::new(n, (1..=n).map(|v| (v, v % n + 1)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        SimpleGraph::new(n, (1..n).map(|v| (v, v + 1)))
    }

    pub fn n(&self) -> usize {
        self.vertices.universe()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && self
                .adj
                .get(u.wrapping_sub(1))
                .is_some_and(|nb| nb.contains(v))
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .flat_map(|u| {
                self.adj[u - 1]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Complement relative to this graph's own vertex set.
    pub fn complement(&self) -> SimpleGraph {
        let adj = (1..=self.n())
            .map(|v| {
                if !self.vertices.contains(v) {
                    return VertexSet::empty(self.n());
                }
                let mut nb = self.vertices.difference(&self.adj[v - 1]);
                nb.remove(v);
                nb
            })
            .collect();
        SimpleGraph {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<SimpleGraph, GraphError> {
        let s = restrict_labels(s, &self.vertices)?;
        Ok(SimpleGraph {
            adj: restrict_adj(&self.adj, &s),
            vertices: s,
        })
    }

    /// Promotes to a [`LoopGraph`] with no loops.
    pub fn to_loop_graph(&self) -> LoopGraph {
        LoopGraph {
            vertices: self.vertices.clone(),
            adj: self.adj.clone(),
            loops: VertexSet::empty(self.n()),
        }
    }

    /// Connected components as vertex sets, ordered by smallest label.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n());
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v - 1].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

fn restrict_labels(s: &VertexSet, vertices: &VertexSet) -> Result<VertexSet, GraphError> {
    let n = vertices.universe();
    if let Some(v) = s.iter().find(|&v| v > n || !vertices.contains(v)) {
        return Err(GraphError::VertexOutOfRange { vertex: v, n });
    }
    // Re-home the set in this graph's universe in case it was built with another bound.
    VertexSet::from_labels(n, s.iter())
}

fn restrict_adj(adj: &[VertexSet], s: &VertexSet) -> Vec<VertexSet> {
    adj.iter()
        .enumerate()
        .map(|(i, nb)| {
            if s.contains(i + 1) {
                nb.intersection(s)
            } else {
                VertexSet::empty(s.universe())
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_graph() -> LoopGraph {
        LoopGraph::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = SimpleGraph::complete(4).unwrap().to_loop_graph();
        assert_eq!(k4.complement().edge_count(), 0);
        let e3 = LoopGraph::new(3, []).unwrap();
        assert_eq!(e3.complement(), SimpleGraph::complete(3).unwrap());
    }

    #[test]
    fn complement_of_worked_graph_is_five_cycle() {
        let c = worked_graph().complement();
        assert_eq!(c.edges(), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn induced_subgraph_keeps_labels_and_loops() {
        let g = worked_graph();
        let s = VertexSet::from_labels(5, [1, 2, 4]).unwrap();
        let h = g.induced_subgraph(&s).unwrap();
        assert_eq!(h.edges(), vec![(1, 1), (1, 4), (2, 4)]);
        assert_eq!(h.vertices().to_vec(), vec![1, 2, 4]);
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);

        let c5 = SimpleGraph::cycle(5).unwrap();
        let p = c5
            .induced_subgraph(&VertexSet::from_labels(5, [1, 2, 3]).unwrap())
            .unwrap();
        assert_eq!(p.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn induced_subgraph_rejects_foreign_vertices() {
        let g = worked_graph();
        let s = VertexSet::from_labels(7, [1, 7]).unwrap();
        assert!(matches!(
            g.induced_subgraph(&s),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
        let h = g
            .induced_subgraph(&VertexSet::from_labels(5, [1, 2]).unwrap())
            .unwrap();
        assert!(h
            .induced_subgraph(&VertexSet::from_labels(5, [3]).unwrap())
            .is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(LoopGraph::new(0, []), Err(GraphError::NoVertices));
        assert_eq!(
            LoopGraph::new(3, [(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            LoopGraph::new(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert_eq!(
            SimpleGraph::new(3, [(2, 2)]),
            Err(GraphError::LoopInSimpleGraph(2))
        );
    }

    #[test]
    fn complement_within_induced_vertex_set() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let s = VertexSet::from_labels(5, [1, 3, 4]).unwrap();
        let h = c5.induced_subgraph(&s).unwrap().complement();
        assert_eq!(h.edges(), vec![(1, 3), (1, 4)]);
    }

    #[test]
    fn edge_bookkeeping() {
        let g = worked_graph();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.edges().len(), 6);
        assert!(g.has_edge(1, 1) && g.has_edge(4, 1) && !g.has_edge(2, 2));
        assert_eq!(g.neighbours(1).to_vec(), vec![3, 4]);
        assert_eq!(g.loop_vertices().to_vec(), vec![1]);
    }
}

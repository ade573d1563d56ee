//! Chordless (induced) cycles.

use std::fmt;

use super::{GraphError, SimpleGraph, VertexSet};

/// A chordless cycle stored in canonical form: it starts at its smallest
/// vertex and runs in the direction whose second vertex is smaller.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedCycle {
    vertices: Vec<usize>,
}

impl InducedCycle {
    /// Canonicalises a cyclic vertex sequence. Does not check the host graph.
    pub fn from_cyclic(vertices: &[usize]) -> Self {
        let len = vertices.len();
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let forward: Vec<usize> = (0..len).map(|k| vertices[(start + k) % len]).collect();
        let backward: Vec<usize> = (0..len)
            .map(|k| vertices[(start + len - k) % len])
            .collect();
        InducedCycle {
            vertices: forward.min(backward),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_labels(n, self.vertices.iter().copied())
            .expect("cycle vertices lie in the host graph")
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Consecutive pairs are edges of `g` and no other pair is.
    pub fn is_induced_in(&self, g: &SimpleGraph) -> bool {
        let len = self.vertices.len();
        if len < 3 {
            return false;
        }
        for i in 0..len {
            for j in i + 1..len {
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if g.has_edge(self.vertices[i], self.vertices[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for InducedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.vertices)
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    r: usize,
    path: Vec<usize>,
    on_path: VertexSet,
}

impl Search<'_> {
    /// Extends the chordless path in `self.path`. `blocked` holds the closed
    /// neighbourhoods of every path vertex except the anchor and the last one.
    /// Returns `false` when `emit` asks to stop.
    fn extend(&mut self, blocked: &VertexSet, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let anchor = self.path[0];
        let last = *self.path.last().unwrap();
        let closing = self.path.len() + 1 == self.r;
        let candidates: Vec<usize> = self
            .g
            .neighbours(last)
            .iter()
            .filter(|&w| w > anchor && !self.on_path.contains(w) && !blocked.contains(w))
            .collect();
        for w in candidates {
            let touches_anchor = self.path.len() > 1 && self.g.has_edge(w, anchor);
            if closing {
                // Reflections are skipped by requiring second < last.
                if touches_anchor && self.path[1] < w {
                    self.path.push(w);
                    let keep_going = emit(&self.path);
                    self.path.pop();
                    if !keep_going {
                        return false;
                    }
                }
                continue;
            }
            if touches_anchor {
                continue;
            }
            let mut next_blocked = blocked.clone();
            if self.path.len() > 1 {
                next_blocked = next_blocked.union(self.g.neighbours(last));
                next_blocked.insert(last);
            }
            self.path.push(w);
            self.on_path.insert(w);
            let keep_going = self.extend(&next_blocked, emit);
            self.on_path.remove(w);
            self.path.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Runs `emit` on every chordless `r`-cycle of `g` in canonical form, in
/// increasing lexicographic order of anchor. Stops early if `emit` returns false.
fn for_each_induced_cycle(g: &SimpleGraph, r: usize, emit: &mut dyn FnMut(&[usize]) -> bool) {
    if r < 3 {
        return;
    }
    for anchor in g.vertices().iter() {
        let mut on_path = VertexSet::empty(g.n());
        on_path.insert(anchor);
        let mut search = Search {
            g,
            r,
            path: vec![anchor],
            on_path,
        };
        if !search.extend(&VertexSet::empty(g.n()), emit) {
            return;
        }
    }
}

/// All chordless cycles of length exactly `r`, each once, sorted.
pub fn enumerate_induced_cycles(g: &SimpleGraph, r: usize) -> Vec<InducedCycle> {
    let mut out = Vec::new();
    for_each_induced_cycle(g, r, &mut |p| {
        out.push(InducedCycle {
            vertices: p.to_vec(),
        });
        true
    });
    out.sort();
    out
}

pub fn has_induced_cycle(g: &SimpleGraph, r: usize) -> bool {
    let mut found = false;
    for_each_induced_cycle(g, r, &mut |_| {
        found = true;
        false
    });
    found
}

/// Least `r >= r_min` such that `g` has a chordless `r`-cycle.
pub fn shortest_induced_cycle_at_least(g: &SimpleGraph, r_min: usize) -> Option<usize> {
    (r_min.max(3)..=g.vertices().len()).find(|&r| has_induced_cycle(g, r))
}

/// For a vertex `v` of degree one in `g`, reports whether `v` avoids every
/// chordless cycle of length at least 5 in the complement of `g`.
pub fn min_degree_one_cycle_check(g: &SimpleGraph, v: usize) -> Result<bool, GraphError> {
    if !g.vertices().contains(v) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let degree = g.degree(v);
    if degree != 1 {
        return Err(GraphError::NotDegreeOne { vertex: v, degree });
    }
    let c = g.complement();
    let mut clear = true;
    for r in 5..=c.vertices().len() {
        for_each_induced_cycle(&c, r, &mut |p| {
            if p.contains(&v) {
                clear = false;
            }
            clear
        });
        if !clear {
            break;
        }
    }
    Ok(clear)
}

//! First nonlinear syzygies read off the graph.
//!
//! For a quadratic monomial ideal `I` with graph `G = G(I)`:
//!
//! * if `G` has induced matchings of size two, nonlinear syzygies first
//!   appear at step 1 and `beta_{1,4}` is the number of such matchings;
//! * otherwise, if `G^c` has a chordless cycle of length at least 5, with
//!   `r` the least such length, they first appear at step `r - 3`,
//!   `beta_{r-3,r}` counts the chordless `r`-cycles, and each cycle's vertex
//!   set is a multidegree carrying exactly one syzygy;
//! * otherwise the resolution is linear.

mod formulas;
mod shape;

pub use formulas::{binomial_identity_check, binomial_identity_sides, cycle_complement_betti};
pub use shape::{first_step_in_row, verify_shape, ShapeReport};

use thiserror::Error;

use crate::graph::{
    count_induced_matchings, diameter, edge_graph, enumerate_induced_cycles, induced_matchings,
    is_chordal, shortest_induced_cycle_at_least, Diameter, GraphError, InducedCycle,
    InducedMatching,
};
use crate::ideal::{IdealError, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(
        "linear presentation routes disagree: no induced 2K2 = {no_induced_matching}, \
         generator conditions = {generator_conditions}, edge graph diameter = {diameter}"
    )]
    InconsistentLinearPresentation {
        no_induced_matching: bool,
        generator_conditions: bool,
        diameter: Diameter,
    },
    #[error("expected a first nonlinear step r - 3 >= 2, found {0}")]
    WrongClassification(String),
    #[error("parameters out of range: {0}")]
    Parameters(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where nonlinear syzygies first show up, with the combinatorial witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonlinearClassification {
    LinearResolution,
    /// `i_3 = 1`; `beta14` induced two-edge matchings.
    FirstStepOne {
        beta14: u64,
        witnesses: Vec<InducedMatching>,
    },
    /// `i_3 = r - 3 >= 2`; one syzygy per chordless `r`-cycle of the complement.
    FirstStepR {
        r: usize,
        i3: usize,
        count: u64,
        witnesses: Vec<InducedCycle>,
        multidegrees: Vec<Vec<usize>>,
    },
}

impl NonlinearClassification {
    /// `i_3`, with 0 meaning a linear resolution.
    pub fn i3(&self) -> usize {
        match self {
            NonlinearClassification::LinearResolution => 0,
            NonlinearClassification::FirstStepOne { .. } => 1,
            NonlinearClassification::FirstStepR { i3, .. } => *i3,
        }
    }

    /// `beta_{i_3, i_3 + 3}`, zero for a linear resolution.
    pub fn beta(&self) -> u64 {
        match self {
            NonlinearClassification::LinearResolution => 0,
            NonlinearClassification::FirstStepOne { beta14, .. } => *beta14,
            NonlinearClassification::FirstStepR { count, .. } => *count,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NonlinearClassification::LinearResolution => "LinearResolution",
            NonlinearClassification::FirstStepOne { .. } => "FirstStepOne",
            NonlinearClassification::FirstStepR { .. } => "FirstStepR",
        }
    }
}

pub fn classify_first_nonlinear(ideal: &MonomialIdeal) -> NonlinearClassification {
    let g = ideal.to_graph();
    let matchings = induced_matchings(&g, 2);
    if !matchings.is_empty() {
        return NonlinearClassification::FirstStepOne {
            beta14: matchings.len() as u64,
            witnesses: matchings,
        };
    }
    let complement = g.complement();
    // Without an induced 2K2 the complement has no chordless 4-cycle either.
    match shortest_induced_cycle_at_least(&complement, 5) {
        Some(r) => {
            let witnesses = enumerate_induced_cycles(&complement, r);
            let multidegrees = witnesses
                .iter()
                .map(|c| {
                    let mut vs = c.vertices().to_vec();
                    vs.sort_unstable();
                    vs
                })
                .collect();
            NonlinearClassification::FirstStepR {
                r,
                i3: r - 3,
                count: witnesses.len() as u64,
                witnesses,
                multidegrees,
            }
        }
        None => NonlinearClassification::LinearResolution,
    }
}

pub fn has_linear_resolution(ideal: &MonomialIdeal) -> bool {
    matches!(
        classify_first_nonlinear(ideal),
        NonlinearClassification::LinearResolution
    )
}

/// Edge ideals: linear resolution iff the complement graph is chordal.
pub fn linear_by_chordality(ideal: &MonomialIdeal) -> bool {
    is_chordal(&ideal.to_graph().complement())
}

/// The three characterizations of linear presentation, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPresentation {
    /// No induced matching of two edges in `G(I)`.
    pub no_induced_matching: bool,
    /// The squarefree part is linearly presented, square vertices are
    /// pairwise adjacent, and every square vertex touches every non-loop edge.
    pub generator_conditions: bool,
    /// Diameter of the edge graph.
    pub diameter: Diameter,
}

impl LinearPresentation {
    pub fn value(&self) -> bool {
        self.no_induced_matching
    }

    pub fn consistent(&self) -> bool {
        self.no_induced_matching == self.generator_conditions
            && self.no_induced_matching == self.diameter.at_most(2)
    }
}

pub fn linear_presentation_routes(ideal: &MonomialIdeal) -> LinearPresentation {
    let g = ideal.to_graph();
    let no_induced_matching = count_induced_matchings(&g, 2) == 0;

    // An edge ideal is linearly presented iff its complement has no chordless
    // 4-cycle; the complement ignores loops, so G(I_sq)^c = G(I)^c.
    let squarefree_ok = enumerate_induced_cycles(&g.complement(), 4).is_empty();
    let squares: Vec<usize> = ideal.squares().collect();
    let squares_adjacent = squares
        .iter()
        .enumerate()
        .all(|(a, &u)| squares[a + 1..].iter().all(|&v| g.has_edge(u, v)));
    let squares_touch_edges = ideal
        .generators()
        .iter()
        .filter(|&&(i, j)| i != j)
        .all(|&(i, j)| {
            squares
                .iter()
                .all(|&k| k == i || k == j || g.has_edge(k, i) || g.has_edge(k, j))
        });
    let generator_conditions = squarefree_ok && squares_adjacent && squares_touch_edges;

    LinearPresentation {
        no_induced_matching,
        generator_conditions,
        diameter: diameter(&edge_graph(ideal)),
    }
}

/// Whether the first syzygies are all linear. Fails only if the three
/// characterizations disagree.
pub fn is_linearly_presented(ideal: &MonomialIdeal) -> Result<bool, AnalysisError> {
    let routes = linear_presentation_routes(ideal);
    if !routes.consistent() {
        return Err(AnalysisError::InconsistentLinearPresentation {
            no_induced_matching: routes.no_induced_matching,
            generator_conditions: routes.generator_conditions,
            diameter: routes.diameter,
        });
    }
    Ok(routes.value())
}

/// `beta_{i, 2(i+1)}`: induced matchings with `i + 1` edges.
pub fn diagonal_betti(ideal: &MonomialIdeal, i: usize) -> u64 {
    count_induced_matchings(&ideal.to_graph(), i + 1)
}

/// Vertex sets of the chordless `r`-cycles when `i_3 = r - 3 >= 2`; each is
/// a squarefree multidegree with `beta_{r-3,S} = 1`.
pub fn predicted_multidegrees(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>, AnalysisError> {
    match classify_first_nonlinear(ideal) {
        NonlinearClassification::FirstStepR { multidegrees, .. } => Ok(multidegrees),
        other => Err(AnalysisError::WrongClassification(other.name().to_string())),
    }
}

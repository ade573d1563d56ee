//! Ideals generated by degree-two monomials.
//!
//! A generator `{i, j}` with `i <= j` is the monomial `x_i x_j`; `i == j` is
//! the square `x_i^2`. Such ideals are in bijection with [`LoopGraph`]s.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{LoopGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    Empty,
    #[error("an ideal needs at least one variable")]
    NoVariables,
    #[error("variable index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generator x{0}*x{1} listed twice")]
    DuplicateGenerator(usize, usize),
    #[error("every generator is a square, so the squarefree part is empty")]
    OnlySquares,
    #[error("no generator divides the monomial with exponents {0:?}")]
    EmptyRestriction(Vec<u32>),
    #[error("cycle complements need n >= 4, got {0}")]
    CycleTooShort(usize),
    #[error("multidegree has {got} entries, expected {expected}")]
    MultidegreeLength { got: usize, expected: usize },
}

/// Ideal of `K[x_1, ..., x_n]` generated by distinct degree-two monomials.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<(usize, usize)>,
}

impl MonomialIdeal {
    /// Builds the ideal from index pairs; `(i, j)` and `(j, i)` mean the same
    /// monomial and may not both appear.
    pub fn new<I>(n: usize, generators: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(IdealError::NoVariables);
        }
        let mut set = BTreeSet::new();
        for (a, b) in generators {
            for index in [a, b] {
                if index == 0 || index > n {
                    return Err(IdealError::IndexOutOfRange { index, n });
                }
            }
            let pair = (a.min(b), a.max(b));
            if !set.insert(pair) {
                return Err(IdealError::DuplicateGenerator(pair.0, pair.1));
            }
        }
        if set.is_empty() {
            return Err(IdealError::Empty);
        }
        Ok(MonomialIdeal {
            n,
            generators: set.into_iter().collect(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Generators as sorted pairs `(i, j)`, `i <= j`.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|&(i, j)| i != j)
    }

    pub fn squares(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators
            .iter()
            .filter(|&&(i, j)| i == j)
            .map(|&(i, _)| i)
    }

    pub fn to_graph(&self) -> LoopGraph {
        LoopGraph::new(self.n, self.generators.iter().copied())
            .expect("generators are validated at construction")
    }

    pub fn from_graph(g: &LoopGraph) -> Result<Self, IdealError> {
        MonomialIdeal::new(g.n(), g.edges())
    }

    /// The edge ideal left after deleting every square generator.
    pub fn squarefree_part(&self) -> Result<MonomialIdeal, IdealError> {
        let gens: Vec<_> = self
            .generators
            .iter()
            .copied()
            .filter(|&(i, j)| i != j)
            .collect();
        if gens.is_empty() {
            return Err(IdealError::OnlySquares);
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Replaces each square `x_j^2` by `x_j x_{n+t}`, numbering the fresh
    /// variables `n+1, n+2, ...` in increasing order of `j`.
    pub fn polarize(&self) -> Polarization {
        let squares: Vec<usize> = self.squares().collect();
        let n_total = self.n + squares.len();
        let fresh_of = |j: usize| self.n + 1 + squares.iter().position(|&s| s == j).unwrap();
        let gens = self
            .generators
            .iter()
            .map(|&(i, j)| if i == j { (i, fresh_of(i)) } else { (i, j) });
        let ideal =
            MonomialIdeal::new(n_total, gens).expect("polarization keeps generators distinct");
        Polarization {
            ideal,
            original_vars: self.n,
            fresh: squares,
        }
    }

    /// Generators dividing `x^s`.
    pub fn restrict(&self, s: &Multidegree) -> Result<MonomialIdeal, IdealError> {
        if s.exponents.len() != self.n {
            return Err(IdealError::MultidegreeLength {
                got: s.exponents.len(),
                expected: self.n,
            });
        }
        let gens: Vec<_> = self
            .generators
            .iter()
            .copied()
            .filter(|&(i, j)| {
                if i == j {
                    s.exponents[i - 1] >= 2
                } else {
                    s.exponents[i - 1] >= 1 && s.exponents[j - 1] >= 1
                }
            })
            .collect();
        if gens.is_empty() {
            return Err(IdealError::EmptyRestriction(s.exponents.clone()));
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Edge ideal whose graph has the `n`-cycle `1 - 2 - ... - n - 1` as
    /// complement: every squarefree quadric except `x_1x_2, ..., x_nx_1`.
    pub fn cycle_complement(n: usize) -> Result<MonomialIdeal, IdealError> {
        if n < 4 {
            return Err(IdealError::CycleTooShort(n));
        }
        let gens = (1..=n).flat_map(|i| {
            (i + 1..=n)
                .filter(move |&j| j != i + 1 && !(i == 1 && j == n))
                .map(move |j| (i, j))
        });
        MonomialIdeal::new(n, gens)
    }

    /// Whether `x_i x_j` (or `x_i^2`) is a generator.
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.generators.binary_search(&(i.min(j), i.max(j))).is_ok()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &(i, j)) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            if i == j {
                write!(f, "x{i}^2")?;
            } else {
                write!(f, "x{i}x{j}")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[n={}] {}", self.n, self)
    }
}

/// Squarefree ideal obtained by polarizing, plus the map back to the
/// original variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    original_vars: usize,
    /// `fresh[t]` is the original variable whose square introduced `x_{n+1+t}`.
    fresh: Vec<usize>,
}

impl Polarization {
    pub fn original_vars(&self) -> usize {
        self.original_vars
    }

    pub fn new_vars(&self) -> usize {
        self.fresh.len()
    }

    /// Original variable a polarized variable stands for.
    pub fn origin(&self, var: usize) -> usize {
        if var <= self.original_vars {
            var
        } else {
            self.fresh[var - self.original_vars - 1]
        }
    }

    /// Pairs `(new variable, original variable)` for every fresh variable.
    pub fn fresh_variables(&self) -> Vec<(usize, usize)> {
        self.fresh
            .iter()
            .enumerate()
            .map(|(t, &j)| (self.original_vars + 1 + t, j))
            .collect()
    }
}

/// Exponent vector `s` in `N^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Multidegree {
    exponents: Vec<u32>,
}

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Multidegree { exponents }
    }

    /// 0/1 vector of length `n` with ones on `labels`.
    pub fn squarefree(n: usize, labels: impl IntoIterator<Item = usize>) -> Self {
        let mut exponents = vec![0; n];
        for v in labels {
            exponents[v - 1] = 1;
        }
        Multidegree { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices with a positive exponent.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_labels(
            self.exponents.len(),
            self.exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1),
        )
        .expect("indices are in range by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn worked_ideal() -> MonomialIdeal {
        MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn graph_round_trip() {
        let i = MonomialIdeal::new(2, [(1, 2)]).unwrap();
        assert_eq!(i.to_graph().edges(), vec![(1, 2)]);
        let sq = MonomialIdeal::new(1, [(1, 1)]).unwrap();
        assert_eq!(sq.to_graph().edges(), vec![(1, 1)]);
        let r = worked_ideal();
        let g = r.to_graph();
        assert_eq!((g.n(), g.loop_vertices().len(), g.edge_count()), (5, 1, 6));
        assert_eq!(MonomialIdeal::from_graph(&g).unwrap(), r);
    }

    #[test]
    fn display() {
        assert_eq!(
            worked_ideal().to_string(),
            "(x1^2, x1x3, x1x4, x2x4, x2x5, x3x5)"
        );
    }

    #[test]
    fn squarefree_part() {
        let r = worked_ideal().squarefree_part().unwrap();
        assert_eq!(r.generators(), &[(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]);
        let i = MonomialIdeal::new(2, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(i.squarefree_part().unwrap().generators(), &[(1, 2)]);
        let sf = MonomialIdeal::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(sf.squarefree_part().unwrap(), sf);
        let only = MonomialIdeal::new(2, [(1, 1), (2, 2)]).unwrap();
        assert_eq!(only.squarefree_part(), Err(IdealError::OnlySquares));
    }

    #[test]
    fn polarize() {
        let sf = MonomialIdeal::new(3, [(1, 2), (2, 3)]).unwrap();
        let p = sf.polarize();
        assert_eq!(p.ideal, sf);
        assert_eq!(p.new_vars(), 0);

        let sq = MonomialIdeal::new(1, [(1, 1)]).unwrap().polarize();
        assert_eq!(sq.ideal, MonomialIdeal::new(2, [(1, 2)]).unwrap());
        assert_eq!(sq.origin(2), 1);

        let r = worked_ideal().polarize();
        let expected =
            MonomialIdeal::new(6, [(1, 6), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        assert_eq!(r.ideal, expected);
        assert_eq!(r.fresh_variables(), vec![(6, 1)]);
    }

    #[test]
    fn polarize_numbers_fresh_variables_by_square_index() {
        let i = MonomialIdeal::new(3, [(3, 3), (1, 1), (1, 2)]).unwrap();
        let p = i.polarize();
        assert_eq!(p.fresh_variables(), vec![(4, 1), (5, 3)]);
        assert!(p.ideal.contains(1, 4) && p.ideal.contains(3, 5));
    }

    #[test]
    fn restrict() {
        let r = worked_ideal();
        assert_eq!(r.restrict(&Multidegree::new(vec![2; 5])).unwrap(), r);
        let sq = r.restrict(&Multidegree::new(vec![1; 5])).unwrap();
        assert_eq!(sq, r.squarefree_part().unwrap());
        let i = MonomialIdeal::new(4, [(1, 2), (3, 4)]).unwrap();
        let s = Multidegree::new(vec![1, 1, 0, 0]);
        assert_eq!(i.restrict(&s).unwrap().generators(), &[(1, 2)]);
        assert!(matches!(
            i.restrict(&Multidegree::new(vec![1, 0, 1, 0])),
            Err(IdealError::EmptyRestriction(_))
        ));
    }

    #[test]
    fn support() {
        assert!(Multidegree::new(vec![0, 0, 0]).support().is_empty());
        assert_eq!(
            Multidegree::new(vec![2, 0, 1]).support().to_vec(),
            vec![1, 3]
        );
        assert_eq!(
            Multidegree::new(vec![1; 5]).support().to_vec(),
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(Multidegree::new(vec![2, 0, 1]).total(), 3);
    }

    #[test]
    fn cycle_complement() {
        let c4 = MonomialIdeal::cycle_complement(4).unwrap();
        assert_eq!(c4.generators(), &[(1, 3), (2, 4)]);
        let c5 = MonomialIdeal::cycle_complement(5).unwrap();
        assert_eq!(c5.num_generators(), 5);
        assert_eq!(
            c5.to_graph().complement(),
            crate::graph::SimpleGraph::cycle(5).unwrap()
        );
        assert_eq!(
            MonomialIdeal::cycle_complement(3),
            Err(IdealError::CycleTooShort(3))
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(MonomialIdeal::new(3, []), Err(IdealError::Empty));
        assert_eq!(
            MonomialIdeal::new(3, [(1, 4)]),
            Err(IdealError::IndexOutOfRange { index: 4, n: 3 })
        );
        assert_eq!(
            MonomialIdeal::new(3, [(1, 2), (2, 1)]),
            Err(IdealError::DuplicateGenerator(1, 2))
        );
    }
}

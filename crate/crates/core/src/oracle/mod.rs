//! Brute-force Betti numbers through Hochster's formula.
//!
//! For a squarefree quadratic ideal with graph `G` on vertex set `V`,
//!
//! ```text
//! beta_{i,S} = dim H~_{|S|-i-2}( clique complex of (G_S)^c )   for S ⊆ V,
//! ```
//!
//! and `beta_{i,j}` is the sum over `|S| = j`. Ideals with squares are
//! polarized first; graded Betti numbers are unchanged by polarization and
//! multigraded results are reported in polarized coordinates.

mod betti;
mod complex;
mod field;
pub mod linalg;

pub use betti::{BettiEntry, BettiTable, MultigradedBetti, MultigradedEntry};
pub use complex::{clique_complex, reduced_homology_dims, SimplicialComplex, MAX_COMPLEX_VERTICES};
pub use field::ExactField;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::ideal::{IdealError, MonomialIdeal, Multidegree};

/// Default bound on the (polarized) number of variables.
pub const DEFAULT_CAP: usize = 16;
/// Hard ceiling for the configurable cap.
pub const MAX_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{vertices} variables after polarization exceed the cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("cap must lie in 2..={MAX_CAP}, got {0}")]
    BadCap(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unrecognised field `{0}` (expected q or gf:<p>)")]
    BadField(String),
    #[error("operation needs a squarefree ideal")]
    NotSquarefree,
    #[error("simplicial complexes are limited to {MAX_COMPLEX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Adjacency masks of the complement of the ideal's graph on `0..n`.
fn complement_masks(ideal: &MonomialIdeal) -> Vec<u64> {
    let n = ideal.num_vars();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut adj: Vec<u64> = (0..n).map(|v| full & !(1 << v)).collect();
    for &(i, j) in ideal.generators() {
        if i != j {
            adj[i - 1] &= !(1 << (j - 1));
            adj[j - 1] &= !(1 << (i - 1));
        }
    }
    adj
}

fn mask_labels(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// Reduced homology of the flag complex of `adj` on `subset`, degree -1 first.
/// Returns `None` when it vanishes identically, which includes every cone.
fn subset_homology(n: usize, adj: &[u64], subset: u64, field: ExactField) -> Option<Vec<usize>> {
    if subset.count_ones() < 2 {
        // A point is acyclic; the empty set only contributes at step -1.
        return None;
    }
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & subset == subset & !(1 << v) {
            return None;
        }
    }
    let c = SimplicialComplex::flag_from_masks(n, adj, subset);
    let dims = reduced_homology_dims(&c, field);
    dims.iter().any(|&d| d > 0).then_some(dims)
}

/// Configured Hochster-formula evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HochsterOracle {
    field: ExactField,
    cap: usize,
}

impl HochsterOracle {
    pub fn new(field: ExactField) -> Self {
        HochsterOracle {
            field,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(self, cap: usize) -> Result<Self, OracleError> {
        if !(2..=MAX_CAP).contains(&cap) {
            return Err(OracleError::BadCap(cap));
        }
        Ok(HochsterOracle { cap, ..self })
    }

    pub fn field(&self) -> ExactField {
        self.field
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Squarefree ideal the formula is applied to, after the size guard.
    fn prepare(
        &self,
        ideal: &MonomialIdeal,
    ) -> Result<(MonomialIdeal, Vec<(usize, usize)>), OracleError> {
        let pol = ideal.polarize();
        let vertices = pol.ideal.num_vars();
        if vertices > self.cap {
            return Err(OracleError::CapExceeded {
                vertices,
                cap: self.cap,
            });
        }
        let map = pol.fresh_variables();
        Ok((pol.ideal, map))
    }

    /// Nonzero per-subset homology, subsets in increasing numeric order.
    fn subset_terms(&self, sq: &MonomialIdeal) -> Vec<(u64, Vec<usize>)> {
        let n = sq.num_vars();
        let adj = complement_masks(sq);
        let field = self.field;
        (0u64..1 << n)
            .into_par_iter()
            .filter_map(|s| subset_homology(n, &adj, s, field).map(|h| (s, h)))
            .collect()
    }

    /// Multigraded Betti numbers. For ideals with squares the entries are in
    /// polarized coordinates and the variable map is attached.
    pub fn multigraded_betti(
        &self,
        ideal: &MonomialIdeal,
    ) -> Result<MultigradedBetti, OracleError> {
        let (sq, map) = self.prepare(ideal)?;
        let mut out = MultigradedBetti::new(sq.num_vars(), map);
        for (s, dims) in self.subset_terms(&sq) {
            let size = s.count_ones() as usize;
            let support = mask_labels(s);
            for (k, &d) in dims.iter().enumerate() {
                // entry k is degree k - 1, which contributes to step |S| - (k - 1) - 2.
                if d > 0 && k < size {
                    out.insert(size - k - 1, support.clone(), d as u64);
                }
            }
        }
        Ok(out)
    }

    /// Graded Betti numbers `beta_{i,j}`.
    pub fn graded_betti(&self, ideal: &MonomialIdeal) -> Result<BettiTable, OracleError> {
        let (sq, _) = self.prepare(ideal)?;
        let mut table = BettiTable::new();
        for (s, dims) in self.subset_terms(&sq) {
            let size = s.count_ones() as usize;
            for (k, &d) in dims.iter().enumerate() {
                if d > 0 && k < size {
                    table.add(size - k - 1, size, BigUint::from(d));
                }
            }
        }
        Ok(table)
    }

    /// Checks that the multigraded Betti numbers of `ideal` and of its
    /// restriction to `x^s` agree on every multidegree dividing `x^s`.
    pub fn restriction_consistency_check(
        &self,
        ideal: &MonomialIdeal,
        s: &Multidegree,
    ) -> Result<bool, OracleError> {
        if !ideal.is_squarefree() || !s.is_squarefree() {
            return Err(OracleError::NotSquarefree);
        }
        let restricted = ideal.restrict(s)?;
        let support = s.support();
        let full = self.multigraded_betti(ideal)?;
        let part = self.multigraded_betti(&restricted)?;
        let divides = |labels: &[usize]| labels.iter().all(|&v| support.contains(v));
        let lhs: Vec<_> = full.iter().filter(|(_, t, _)| divides(t)).collect();
        let rhs: Vec<_> = part.iter().filter(|(_, t, _)| divides(t)).collect();
        Ok(lhs == rhs)
    }
}

/// Linear strand `beta_{i,i+2}` for `i = 0, 1, ...` from component counts:
/// the sum over `(i+2)`-subsets `S` of `#components((G_S)^c) - 1`.
/// Trailing zeros are dropped.
pub fn linear_strand_betti(ideal: &MonomialIdeal) -> Result<Vec<BigUint>, OracleError> {
    if !ideal.is_squarefree() {
        return Err(OracleError::NotSquarefree);
    }
    let n = ideal.num_vars();
    if n > MAX_CAP {
        return Err(OracleError::CapExceeded {
            vertices: n,
            cap: MAX_CAP,
        });
    }
    let adj = complement_masks(ideal);
    let components = |s: u64| -> u64 {
        let mut left = s;
        let mut count = 0;
        while left != 0 {
            let mut frontier = left & left.wrapping_neg();
            let mut comp = 0u64;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[v] & s;
                }
                frontier = next & !comp;
            }
            left &= !comp;
            count += 1;
        }
        count
    };
    let mut strand = vec![0u64; n.saturating_sub(1)];
    let sums: Vec<(usize, u64)> = (0u64..1 << n)
        .into_par_iter()
        .filter(|s| s.count_ones() >= 2)
        .map(|s| (s.count_ones() as usize - 2, components(s) - 1))
        .collect();
    for (i, c) in sums {
        strand[i] += c;
    }
    while strand.last() == Some(&0) {
        strand.pop();
    }
    Ok(strand.into_iter().map(BigUint::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    fn cycle_complement_ideal(n: usize) -> MonomialIdeal {
        let gens = (1..=n).flat_map(|i| {
            (i + 1..=n)
                .filter(move |&j| !(j == i + 1 || (i == 1 && j == n)))
                .map(move |j| (i, j))
        });
        MonomialIdeal::new(n, gens).unwrap()
    }

    #[test]
    fn principal_ideal() {
        let i = MonomialIdeal::new(2, [(1, 2)]).unwrap();
        let t = HochsterOracle::new(ExactField::Rationals)
            .graded_betti(&i)
            .unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 2), 1u32)]));
    }

    #[test]
    fn two_coprime_quadrics() {
        let i = MonomialIdeal::new(4, [(1, 3), (2, 4)]).unwrap();
        let t = HochsterOracle::new(ExactField::Rationals)
            .graded_betti(&i)
            .unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 2), 2u32), ((1, 4), 1)]));
    }

    #[test]
    fn worked_ideal_both_fields() {
        let i = MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap();
        let expected = BettiTable::from_entries([
            ((0, 2), 6u32),
            ((1, 3), 7),
            ((2, 4), 1),
            ((1, 4), 1),
            ((2, 5), 3),
            ((3, 6), 1),
        ]);
        for field in [ExactField::Rationals, ExactField::Prime(2)] {
            let t = HochsterOracle::new(field).graded_betti(&i).unwrap();
            assert_eq!(t, expected, "{field}");
        }
    }

    #[test]
    fn loop_next_to_edge_counts_both_matchings() {
        let i = MonomialIdeal::new(4, [(1, 2), (3, 4), (2, 2)]).unwrap();
        let t = HochsterOracle::new(ExactField::Rationals)
            .graded_betti(&i)
            .unwrap();
        assert_eq!(t.get(1, 4), big(2));
    }

    #[test]
    fn five_cycle_complement_multidegrees() {
        let i = cycle_complement_ideal(5);
        let m = HochsterOracle::new(ExactField::Rationals)
            .multigraded_betti(&i)
            .unwrap();
        assert_eq!(m.get(2, &[1, 2, 3, 4, 5]), 1);
        assert_eq!(m.get(1, &[1, 2, 3, 4, 5]), 0);
        assert_eq!(m.get(0, &[1, 2, 3, 4, 5]), 0);
        assert!(m.iter().all(|(_, s, _)| s.len() >= 2));
        assert_eq!(linear_strand_betti(&i).unwrap(), vec![big(5), big(5)]);
    }

    #[test]
    fn linear_strand_starts_with_generator_count() {
        let i = MonomialIdeal::new(5, [(1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let strand = linear_strand_betti(&i).unwrap();
        assert_eq!(strand[0], big(4));
        let t = HochsterOracle::new(ExactField::Rationals)
            .graded_betti(&i)
            .unwrap();
        for (k, v) in strand.iter().enumerate() {
            assert_eq!(&t.get(k, k + 2), v);
        }
        assert!(linear_strand_betti(&MonomialIdeal::new(1, [(1, 1)]).unwrap()).is_err());
    }

    #[test]
    fn polarized_coordinates_carry_the_variable_map() {
        let i = MonomialIdeal::new(2, [(1, 1), (1, 2)]).unwrap();
        let m = HochsterOracle::new(ExactField::Rationals)
            .multigraded_betti(&i)
            .unwrap();
        assert_eq!(m.num_vars(), 3);
        assert_eq!(m.variable_map(), &[(3, 1)]);
        assert_eq!(m.get(0, &[1, 3]), 1);
        assert_eq!(m.get(1, &[1, 2, 3]), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let i = cycle_complement_ideal(6);
        let oracle = HochsterOracle::new(ExactField::Rationals)
            .with_cap(5)
            .unwrap();
        assert_eq!(
            oracle.graded_betti(&i),
            Err(OracleError::CapExceeded {
                vertices: 6,
                cap: 5
            })
        );
        assert_eq!(
            HochsterOracle::new(ExactField::Rationals).with_cap(1),
            Err(OracleError::BadCap(1))
        );
    }

    #[test]
    fn restriction_consistency() {
        let oracle = HochsterOracle::new(ExactField::Rationals);
        let c6 = cycle_complement_ideal(6);
        let full = Multidegree::new(vec![1; 6]);
        assert_eq!(oracle.restriction_consistency_check(&c6, &full), Ok(true));
        let five = Multidegree::squarefree(6, [1, 2, 3, 4, 6]);
        assert_eq!(oracle.restriction_consistency_check(&c6, &five), Ok(true));
        let single = Multidegree::squarefree(6, [1, 3]);
        assert_eq!(oracle.restriction_consistency_check(&c6, &single), Ok(true));
        let sq = MonomialIdeal::new(2, [(1, 1), (1, 2)]).unwrap();
        assert_eq!(
            oracle.restriction_consistency_check(&sq, &Multidegree::new(vec![1, 1])),
            Err(OracleError::NotSquarefree)
        );
    }
}

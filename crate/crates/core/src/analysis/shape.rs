//! Staircase shape of a Betti diagram.

use serde::Serialize;

use crate::oracle::BettiTable;

/// Indices `i_d` for `d = 3..=m`, together with the shape checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    /// `indices[k]` is `i_{k+3}`.
    pub indices: Vec<usize>,
    /// `1 <= i_3 < i_4 < ... < i_m`.
    pub strictly_increasing: bool,
    /// No nonzero entry with `j > 2(i+1)`.
    pub diagonal_ok: bool,
    pub valid: bool,
}

impl ShapeReport {
    /// `i_3`, or 0 when the table has a single row.
    pub fn i3(&self) -> usize {
        self.indices.first().copied().unwrap_or(0)
    }
}

/// `min { i >= 1 : beta_{i,i+d} != 0 }`, or 0 if there is none.
pub fn first_step_in_row(t: &BettiTable, d: usize) -> usize {
    t.iter()
        .filter(|&(i, j, _)| i >= 1 && j == i + d)
        .map(|(i, _, _)| i)
        .min()
        .unwrap_or(0)
}

pub fn verify_shape(t: &BettiTable) -> ShapeReport {
    let m = t.regularity().unwrap_or(2);
    let indices: Vec<usize> = (3..=m).map(|d| first_step_in_row(t, d)).collect();
    let strictly_increasing =
        indices.iter().all(|&i| i >= 1) && indices.windows(2).all(|w| w[0] < w[1]);
    let diagonal_ok = t.iter().all(|(i, j, _)| j <= 2 * (i + 1));
    ShapeReport {
        valid: strictly_increasing && diagonal_ok,
        indices,
        strictly_increasing,
        diagonal_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_row_is_vacuously_valid() {
        let t = BettiTable::from_entries([((0, 2), 3u32), ((1, 3), 2)]);
        let r = verify_shape(&t);
        assert!(r.valid);
        assert!(r.indices.is_empty());
        assert_eq!(r.i3(), 0);
    }

    #[test]
    fn worked_table_has_i3_one() {
        let t = BettiTable::from_entries([
            ((0, 2), 6u32),
            ((1, 3), 7),
            ((2, 4), 1),
            ((1, 4), 1),
            ((2, 5), 3),
            ((3, 6), 1),
        ]);
        let r = verify_shape(&t);
        assert_eq!(r.indices, vec![1]);
        assert!(r.valid);
    }

    #[test]
    fn detects_violations() {
        // Two rows starting at the same step.
        let t = BettiTable::from_entries([((0, 2), 1u32), ((2, 5), 1), ((2, 6), 1)]);
        let r = verify_shape(&t);
        assert_eq!(r.indices, vec![2, 2]);
        assert!(!r.strictly_increasing && !r.valid);
        // Entry above the diagonal.
        let t = BettiTable::from_entries([((0, 2), 1u32), ((1, 5), 1)]);
        let r = verify_shape(&t);
        assert!(!r.diagonal_ok && !r.valid);
        // A gap in the staircase.
        let t = BettiTable::from_entries([((0, 2), 1u32), ((3, 7), 1)]);
        assert_eq!(verify_shape(&t).indices, vec![0, 3]);
        assert!(!verify_shape(&t).valid);
    }
}

//! Closed formulas for complements of cycles.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::AnalysisError;
use crate::graph::binomial;
use crate::oracle::BettiTable;

/// Betti table of the ideal whose graph is the complement of the `n`-cycle:
/// `beta_{i,i+2} = n (i+1)/(n-i-2) C(n-2, i+2)` for `0 <= i <= n-4`, and
/// `beta_{n-3,n} = 1`.
pub fn cycle_complement_betti(n: usize) -> Result<BettiTable, AnalysisError> {
    if n < 4 {
        return Err(AnalysisError::Parameters(format!("cycle length {n} < 4")));
    }
    let mut t = BettiTable::new();
    for i in 0..=n - 4 {
        let num = BigUint::from(n) * BigUint::from(i + 1) * binomial(n as u64 - 2, i as u64 + 2);
        let den = BigUint::from(n - i - 2);
        let (q, r) = num.div_rem(&den);
        assert!(
            r.is_zero(),
            "non-integral linear strand entry at n={n}, i={i}"
        );
        t.add(i, i + 2, q);
    }
    t.add(n - 3, n, BigUint::from(1u32));
    Ok(t)
}

fn binom_q(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(binomial(n as u64, k as u64)))
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Both sides of
/// `sum_{k=1}^{a} k/(k+1) C(m-a,k) C(a,k) = a/(m-a+1) C(m, a+1)`.
pub fn binomial_identity_sides(
    m: usize,
    a: usize,
) -> Result<(BigRational, BigRational), AnalysisError> {
    if a < 1 || a >= m {
        return Err(AnalysisError::Parameters(format!(
            "need 1 <= a < m, got m={m}, a={a}"
        )));
    }
    let lhs = (1..=a).fold(BigRational::zero(), |acc, k| {
        acc + ratio(k, k + 1) * binom_q(m - a, k) * binom_q(a, k)
    });
    let rhs = ratio(a, m - a + 1) * binom_q(m, a + 1);
    Ok((lhs, rhs))
}

pub fn binomial_identity_check(m: usize, a: usize) -> Result<bool, AnalysisError> {
    let (lhs, rhs) = binomial_identity_sides(m, a)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear_row(n: usize) -> Vec<u64> {
        let t = cycle_complement_betti(n).unwrap();
        t.row(2)
            .iter()
            .take(n - 3)
            .map(|v| v.try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_cycle_complements() {
        let t4 = cycle_complement_betti(4).unwrap();
        assert_eq!(t4, BettiTable::from_entries([((0, 2), 2u32), ((1, 4), 1)]));
        let t5 = cycle_complement_betti(5).unwrap();
        assert_eq!(
            t5,
            BettiTable::from_entries([((0, 2), 5u32), ((1, 3), 5), ((2, 5), 1)])
        );
        assert_eq!(linear_row(6), vec![9, 16, 9]);
        assert!(cycle_complement_betti(3).is_err());
    }

    #[test]
    fn linear_strand_is_palindromic() {
        for n in 4..=20 {
            let row = linear_row(n);
            let mut rev = row.clone();
            rev.reverse();
            assert_eq!(row, rev, "n={n}");
        }
    }

    #[test]
    fn identity_examples() {
        let (l, r) = binomial_identity_sides(3, 1).unwrap();
        assert_eq!((l.clone(), r), (ratio(1, 1), ratio(1, 1)));
        let (l, _) = binomial_identity_sides(5, 2).unwrap();
        assert_eq!(l, ratio(5, 1));
        let (l, r) = binomial_identity_sides(2, 1).unwrap();
        assert_eq!((l, r), (ratio(1, 2), ratio(1, 2)));
        assert!(binomial_identity_check(4, 4).is_err());
        assert!(binomial_identity_check(4, 0).is_err());
    }
}

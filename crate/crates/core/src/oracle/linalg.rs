//! Exact matrix rank over the rationals and over prime fields.
//!
//! Rational rank uses fraction-free (Bareiss) elimination. The first pass
//! runs in `i128` with checked arithmetic; any overflow restarts the whole
//! elimination on big integers, so the answer is always exact.

use num_bigint::BigInt;
use num_traits::Zero;

use super::ExactField;

pub fn rank(matrix: &[Vec<i64>], field: ExactField) -> usize {
    match field {
        ExactField::Rationals => rank_rational(matrix),
        ExactField::Prime(p) => rank_mod_p(matrix, p),
    }
}

pub fn rank_rational(matrix: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    bareiss_rank_i128(small).unwrap_or_else(|| rank_rational_big(matrix))
}

pub(crate) fn rank_rational_big(matrix: &[Vec<i64>]) -> usize {
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank_big(big)
}

fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let p = a[rank][col];
        for r in rank + 1..rows {
            let f = a[r][col];
            for c in col + 1..cols {
                let lhs = p.checked_mul(a[r][c])?;
                let rhs = f.checked_mul(a[rank][c])?;
                a[r][c] = lhs.checked_sub(rhs)? / prev;
            }
            a[r][col] = 0;
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let p = a[rank][col].clone();
        for r in rank + 1..rows {
            let f = a[r][col].clone();
            for c in col + 1..cols {
                let v = (&p * &a[r][c] - &f * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| {
                    let r = (x as i128).rem_euclid(p as i128);
                    r as u64
                })
                .collect()
        })
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for c in col..cols {
            a[rank][c] = mul_mod(a[rank][c], inv, p);
        }
        for r in rank + 1..rows {
            let f = a[r][col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                let sub = mul_mod(f, a[rank][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Rank by enumerating square minors and computing determinants with
    /// rational cofactor expansion; independent of elimination.
    fn rank_by_minors(m: &[Vec<i64>]) -> usize {
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            if m.is_empty() {
                return BigInt::from(1);
            }
            let mut acc = BigInt::zero();
            for (c, x) in m[0].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = x * det(&minor);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                .collect()
        }
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<BigInt>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect())
                        .collect();
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn identity_and_zero() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(rank_rational(&id), 3);
        assert_eq!(rank_mod_p(&id, 2), 3);
        assert_eq!(rank_rational(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_rational(&[]), 0);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2: full rank over Q and GF(3), rank 1 over GF(2).
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, ExactField::Rationals), 2);
        assert_eq!(rank(&m, ExactField::Prime(3)), 2);
        assert_eq!(rank(&m, ExactField::Prime(2)), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        // Powers of a large base overflow i128 during elimination.
        let b = 3_000_000_000i64;
        let m: Vec<Vec<i64>> = (0..5)
            .map(|r| {
                (0..5)
                    .map(|c| if r == c { b } else { (r * 5 + c) as i64 })
                    .collect()
            })
            .collect();
        let small: Vec<Vec<i128>> = m
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        assert!(bareiss_rank_i128(small).is_none());
        assert_eq!(rank_rational(&m), 5);
    }

    proptest! {
        #[test]
        fn bareiss_matches_minor_rank(
            m in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..5)
        ) {
            let expected = rank_by_minors(&m);
            prop_assert_eq!(rank_rational(&m), expected);
            prop_assert_eq!(rank_rational_big(&m), expected);
            // A large prime only drops rank if it divides some maximal minor.
            prop_assert_eq!(rank_mod_p(&m, 1_000_000_007), expected);
        }
    }
}

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::GraphError;

/// `C(n, k)` as an exact big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// Number of induced subgraphs of the `n`-cycle with `i` vertices and `k`
/// connected components: `(n / k) * C(i-1, k-1) * C(n-i-1, k-1)`.
pub fn count_cycle_subgraphs(n: u64, i: u64, k: u64) -> Result<BigUint, GraphError> {
    if !(0 < k && k <= i && i < n) {
        return Err(GraphError::Parameters(format!(
            "need 0 < k <= i < n, got n={n}, i={i}, k={k}"
        )));
    }
    let numerator = BigUint::from(n) * binomial(i - 1, k - 1) * binomial(n - i - 1, k - 1);
    let (q, r) = numerator.div_rem(&BigUint::from(k));
    assert!(r.is_zero(), "cycle subgraph count is not integral");
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(62, 31), BigUint::from(465428353255261088u64));
    }

    #[test]
    fn small_cycle_counts() {
        assert_eq!(count_cycle_subgraphs(5, 2, 1).unwrap(), BigUint::from(5u32));
        assert_eq!(count_cycle_subgraphs(5, 2, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(count_cycle_subgraphs(6, 3, 1).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn range_violations() {
        assert!(count_cycle_subgraphs(5, 5, 1).is_err());
        assert!(count_cycle_subgraphs(5, 2, 0).is_err());
        assert!(count_cycle_subgraphs(5, 2, 3).is_err());
    }
}

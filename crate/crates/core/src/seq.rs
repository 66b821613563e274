//! Exact integer sequences: binomial coefficients, Catalan, Fibonacci and
//! Riordan numbers.
//!
//! Everything is computed over [`BigUint`]/[`BigInt`], so no value reachable
//! from the counting code can overflow.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `binom(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc stays integral: after step i it equals binom(n - k + i, i)
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// The Catalan number `C_r`.
pub fn catalan(r: u64) -> BigUint {
    binomial(2 * r, r as i64) / (r + 1)
}

/// Catalan number at the rational index `twice / 2`.
///
/// Non-integer indices give 0. Negative integer indices are rejected.
pub fn catalan_half(twice: i64) -> Result<BigUint> {
    if twice % 2 != 0 {
        return Ok(BigUint::zero());
    }
    if twice < 0 {
        return Err(Error::NegativeCatalanIndex(twice / 2));
    }
    Ok(catalan((twice / 2) as u64))
}

/// Fibonacci numbers indexed from -1: `F_{-1} = 1`, `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(i: i64) -> Result<BigUint> {
    if i < -1 {
        return Err(Error::FibonacciIndex(i));
    }
    if i == -1 {
        return Ok(BigUint::one());
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    for _ in 0..i {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Riordan number `R_m = sum_j (-1)^(m-j) binom(m, j) C_j`.
pub fn riordan(m: u64) -> BigUint {
    let mut sum = BigInt::zero();
    for j in 0..=m {
        let term = BigInt::from(binomial(m, j as i64) * catalan(j));
        if (m - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    sum.to_biguint().expect("Riordan numbers are nonnegative")
}

/// Binomial transform of the Catalan numbers, `sum_{k=0}^{m} binom(m, k) C_k`.
pub fn catalan_binomial_transform(m: u64) -> BigUint {
    (0..=m).map(|k| binomial(m, k as i64) * catalan(k)).sum()
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// Convert to `u64` when it fits. Used by callers comparing against
/// enumeration counts.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 1), big(3));
        assert_eq!(binomial(5, 7), big(0));
        assert_eq!(binomial(6, 3), big(20));
        assert_eq!(binomial(4, -1), big(0));
        assert_eq!(binomial(0, 0), big(1));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigUint::one()];
        for n in 1..=64u64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v, "binom({n},{k})");
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(4), big(14));
        assert_eq!(catalan(11), big(58786));
        assert_eq!(catalan_half(3), Ok(big(0)));
        assert_eq!(catalan_half(-1), Ok(big(0)));
        assert_eq!(catalan_half(8), Ok(big(14)));
        assert_eq!(catalan_half(-2), Err(Error::NegativeCatalanIndex(-1)));
    }

    #[test]
    fn catalan_at_64_does_not_overflow_u64_silently() {
        // C_64 exceeds u64; the big-integer result must be exact
        let c64 = catalan(64);
        assert!(c64.to_u64().is_none());
        assert_eq!(c64 * 65u32, binomial(128, 64));
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(-1), Ok(big(1)));
        assert_eq!(fibonacci(0), Ok(big(0)));
        assert_eq!(fibonacci(1), Ok(big(1)));
        assert_eq!(fibonacci(7), Ok(big(13)));
        assert_eq!(fibonacci(21), Ok(big(10946)));
        assert_eq!(fibonacci(-2), Err(Error::FibonacciIndex(-2)));
    }

    #[test]
    fn riordan_values() {
        assert_eq!(riordan(0), big(1));
        assert_eq!(riordan(1), big(0));
        assert_eq!(riordan(4), big(3));
        // A005043
        let expected = [1u64, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585];
        for (m, &e) in expected.iter().enumerate() {
            assert_eq!(riordan(m as u64), big(e), "R_{m}");
        }
    }

    #[test]
    fn catalan_binomial_transform_values() {
        // A007317 shifted: 1, 2, 5, 15, 51, 188, 731
        let expected = [1u64, 2, 5, 15, 51, 188, 731];
        for (m, &e) in expected.iter().enumerate() {
            assert_eq!(catalan_binomial_transform(m as u64), big(e));
        }
    }
}

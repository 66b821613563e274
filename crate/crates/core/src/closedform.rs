//! Closed forms, the first-block recurrence, the two binomial identities and
//! the structural characterizations of the 132, 213 and 312 classes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::pattern::Pattern;
use crate::seq::{
    binomial, catalan, catalan_binomial_transform, catalan_half, fibonacci, pow2, riordan,
};

/// Number of partitions of `[n]` avoiding `pat`, from the closed forms.
pub fn count_formula(n: usize, pat: Pattern) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let n64 = n as u64;
    Ok(match pat {
        Pattern::P123 => BigUint::from(match n {
            1 => 1u32,
            2 => 2,
            3 => 1,
            _ => 0,
        }),
        Pattern::P132 => pow2(n64 - 1),
        Pattern::P213 | Pattern::P312 => fibonacci(2 * n as i64 - 1)?,
        Pattern::P231 => catalan(n64),
        Pattern::P321 => catalan_binomial_transform(n64 - 1),
    })
}

/// Avoiders of 231 or 321 with `|M| = k`:
/// `binom(n-1, k) 2^k C_{(n-1-k)/2}` and `binom(n-1, k) 2^k R_{n-1-k}`.
pub fn refined_formula(n: usize, k: usize, pat: Pattern) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if !matches!(pat, Pattern::P231 | Pattern::P321) {
        return Err(Error::UnsupportedPattern(format!(
            "{pat} has no |M| refinement formula"
        )));
    }
    if k > n - 1 {
        return Ok(BigUint::zero());
    }
    let rest = (n - 1 - k) as u64;
    let tail = match pat {
        Pattern::P231 => catalan_half(rest as i64)?,
        _ => riordan(rest),
    };
    Ok(binomial(n as u64 - 1, k as i64) * pow2(k as u64) * tail)
}

/// The table `u(n, k)`, `1 <= k <= n <= n_max`, solved from
/// `u(n, n) = 1`, `u(n, k) = k u(n - k)` and `u(n) = sum_k u(n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UTable {
    rows: Vec<Vec<BigUint>>,
    totals: Vec<BigUint>,
}

impl UTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// `u(n, k)`; zero outside `1 <= k <= n`.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if n == 0 || k == 0 || k > n || n > self.rows.len() {
            return BigUint::zero();
        }
        self.rows[n - 1][k - 1].clone()
    }

    /// `u(n, 1), ..., u(n, n)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    /// `u(n)`.
    pub fn total(&self, n: usize) -> &BigUint {
        &self.totals[n - 1]
    }

    /// Checks `u(n, j) = j F_{2n-2j-1}` for `1 <= j < n` and
    /// `u(n) = F_{2n-1}` on every row. Returns the first failing `(n, j)`,
    /// with `j = 0` standing for the row total.
    pub fn closed_form_mismatch(&self) -> Option<(usize, usize)> {
        for n in 1..=self.n_max() {
            for j in 1..n {
                let expected = BigUint::from(j) * fibonacci((2 * n - 2 * j) as i64 - 1).ok()?;
                if self.get(n, j) != expected {
                    return Some((n, j));
                }
            }
            if *self.total(n) != fibonacci(2 * n as i64 - 1).ok()? {
                return Some((n, 0));
            }
        }
        None
    }
}

pub fn u_system(n_max: usize) -> Result<UTable> {
    if n_max == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max);
    let mut totals: Vec<BigUint> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let row: Vec<BigUint> = (1..=n)
            .map(|k| {
                if k == n {
                    BigUint::one()
                } else {
                    BigUint::from(k) * &totals[n - k - 1]
                }
            })
            .collect();
        totals.push(row.iter().sum());
        rows.push(row);
    }
    Ok(UTable { rows, totals })
}

/// `C_n = sum_k binom(n-1, 2k) 2^(n-1-2k) C_k`, checked exactly.
pub fn verify_touchard(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let m = n as u64 - 1;
    let rhs: BigUint = (0..=m / 2)
        .map(|k| binomial(m, 2 * k as i64) * pow2(m - 2 * k) * catalan(k))
        .sum();
    catalan(n as u64) == rhs
}

/// `sum_k binom(n, k) 2^k R_{n-k} = sum_k binom(n, k) C_k`, checked exactly.
pub fn verify_identity5(n: usize) -> bool {
    let n = n as u64;
    let lhs: BigUint = (0..=n)
        .map(|k| binomial(n, k as i64) * pow2(k) * riordan(n - k))
        .sum();
    lhs == catalan_binomial_transform(n)
}

/// 132-avoidance holds iff the flattening is the identity.
pub fn characterize_132(p: &SetPartition) -> bool {
    p.flatten().is_identity()
}

/// First block is `I ∪ J` with `I` a nonempty initial segment and `J` a
/// (possibly empty) terminal segment, and the standardized remainder
/// satisfies the same condition.
pub fn characterize_213(p: &SetPartition) -> bool {
    let n = p.n();
    let first = &p.blocks()[0];
    let split = first
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| x == i + 1)
        .count();
    let tail = &first[split..];
    let terminal = tail
        .iter()
        .enumerate()
        .all(|(i, &x)| x == n - tail.len() + 1 + i);
    terminal && p.standardized_tail().as_ref().is_none_or(characterize_213)
}

/// First block is all of `[n]`, or `[k + 1]` minus one element `a >= 2`
/// (so it has length `k` and lies inside `[k + 1]`); the standardized
/// remainder satisfies the same condition.
pub fn characterize_312(p: &SetPartition) -> bool {
    let first = &p.blocks()[0];
    let within = *first.last().expect("blocks are nonempty") <= first.len() + 1;
    within && p.standardized_tail().as_ref().is_none_or(characterize_312)
}

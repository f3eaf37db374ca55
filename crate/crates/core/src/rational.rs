//! Small exact-arithmetic helpers shared by the root and representation code.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

/// Exact rational with machine-word numerator and denominator.
///
/// Every quantity in a root system of rank at most 8 has a tiny height, so
/// `i64` never overflows here.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Returns the integer value of `x`, or `None` when it has a remainder.
pub fn as_integer(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer())
}

/// Solves `a * x = b` for a square nonsingular `a` by Gauss-Jordan elimination.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for entry in m[col].iter_mut() {
            *entry *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..=n {
                    let delta = factor * m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Rank of a list of integer vectors, computed by exact elimination over Q.
pub fn rank(vectors: &[Vec<BigInt>]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| v.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &lead;
            for c in col..width {
                let delta = &factor * &rows[rank][c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// `numer / denom` as the nearest `f64`, without overflowing on huge inputs.
pub fn ratio_to_f64(numer: &BigInt, denom: &BigInt) -> f64 {
    BigRational::new(numer.clone(), denom.clone())
        .to_f64()
        .unwrap_or(f64::NAN)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

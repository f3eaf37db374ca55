//! `sl(2, C)` acting on `Lambda^k C^{n+1}` through the irreducible
//! representation, and the irreducible summand generated by the highest
//! wedge `xi_k = v_0 ^ ... ^ v_{k-1}`.
//!
//! Basis: `k`-subsets of `{0, ..., n}` in lexicographic order, each standing
//! for the wedge of its elements in increasing order.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Zero;

use super::charts::{default_sample_count, transition_samples};
use super::irrep::{apply, build_irrep, IrrepN};
use super::winding::winding_number;
use crate::error::{Error, Result};
use crate::rational::rank;

/// Sum of the `k` largest weights `n, n-2, ...`, which is `k(n-k+1)`.
pub fn exterior_weight(n: usize, k: usize) -> Result<i64> {
    check_range(n, k)?;
    Ok((k * (n - k + 1)) as i64)
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("k = {k} must lie in 1..={n}")));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct ExteriorRep {
    n: usize,
    k: usize,
    basis: Vec<Vec<usize>>,
    x: DMatrix<i64>,
    h: DMatrix<i64>,
    y: DMatrix<i64>,
}

/// The cyclic module `V_k = span{Y^j xi_k}`.
#[derive(Debug, Clone)]
pub struct CyclicSpan {
    /// `Y^j xi_k` for `j = 0..` until the first zero vector.
    pub vectors: Vec<Vec<BigInt>>,
    /// Rank of `vectors`, by exact elimination.
    pub dim: usize,
    /// The triple restricted to `V_k`, in the basis `Y^j xi_k`.
    pub restricted: (DMatrix<i64>, DMatrix<i64>, DMatrix<i64>),
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance the rightmost element that still has room.
        let Some(pos) = (0..k).rev().find(|&i| current[i] < n + 1 - k + i) else {
            return out;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
}

/// Extends `a` to `Lambda^k` as a derivation: `a` acts on one factor at a
/// time, and the replaced factor is moved into sorted position with the
/// corresponding sign.
fn lift(
    a: &DMatrix<i64>,
    basis: &[Vec<usize>],
    index: &HashMap<Vec<usize>, usize>,
) -> DMatrix<i64> {
    let dim = basis.len();
    let mut out = DMatrix::zeros(dim, dim);
    for (col, subset) in basis.iter().enumerate() {
        for &s in subset {
            for i in 0..a.nrows() {
                let coeff = a[(i, s)];
                if coeff == 0 {
                    continue;
                }
                if i != s && subset.contains(&i) {
                    continue;
                }
                let (lo, hi) = if i < s { (i, s) } else { (s, i) };
                let crossings = subset.iter().filter(|&&e| e > lo && e < hi).count();
                let sign = if crossings % 2 == 0 { 1 } else { -1 };
                let mut image: Vec<usize> =
                    subset.iter().map(|&e| if e == s { i } else { e }).collect();
                image.sort_unstable();
                out[(index[&image], col)] += sign * coeff;
            }
        }
    }
    out
}

/// Builds the action of `rho_n` on `Lambda^k C^{n+1}`.
pub fn exterior_rep(n: usize, k: usize) -> Result<ExteriorRep> {
    check_range(n, k)?;
    let rep = build_irrep(n)?;
    let basis = k_subsets(n, k);
    let index: HashMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    Ok(ExteriorRep {
        n,
        k,
        x: lift(rep.x(), &basis, &index),
        h: lift(rep.h(), &basis, &index),
        y: lift(rep.y(), &basis, &index),
        basis,
    })
}

impl ExteriorRep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn x(&self) -> &DMatrix<i64> {
        &self.x
    }

    pub fn h(&self) -> &DMatrix<i64> {
        &self.h
    }

    pub fn y(&self) -> &DMatrix<i64> {
        &self.y
    }

    /// `xi_k`, the first basis vector.
    pub fn xi(&self) -> Vec<BigInt> {
        (0..self.dim())
            .map(|i| BigInt::from(u8::from(i == 0)))
            .collect()
    }

    /// Computes `V_k` and the restriction of the triple to it.
    pub fn cyclic_span(&self) -> Result<CyclicSpan> {
        let mut vectors = vec![self.xi()];
        loop {
            let next = apply(&self.y, vectors.last().expect("nonempty"));
            if next.iter().all(Zero::is_zero) {
                break;
            }
            if vectors.len() > self.dim() {
                return Err(Error::Consistency(
                    "Y is not nilpotent on the exterior power".into(),
                ));
            }
            vectors.push(next);
        }
        let dim = rank(&vectors);
        let size = vectors.len();

        let mut x = DMatrix::zeros(size, size);
        let mut h = DMatrix::zeros(size, size);
        let mut y = DMatrix::zeros(size, size);
        for j in 0..size {
            if j + 1 < size {
                y[(j + 1, j)] = 1;
            }
            h[(j, j)] = eigen_ratio(&apply(&self.h, &vectors[j]), &vectors[j])?;
            let raised = apply(&self.x, &vectors[j]);
            if j == 0 {
                if raised.iter().any(|c| !c.is_zero()) {
                    return Err(Error::Consistency(
                        "xi_k is not a highest-weight vector".into(),
                    ));
                }
            } else {
                x[(j - 1, j)] = eigen_ratio(&raised, &vectors[j - 1])?;
            }
        }
        Ok(CyclicSpan {
            vectors,
            dim,
            restricted: (x, h, y),
        })
    }

    /// The irreducible representation carried by `V_k`.
    pub fn induced_irrep(&self) -> Result<IrrepN> {
        let (x, h, y) = self.cyclic_span()?.restricted;
        IrrepN::from_triple(x, h, y)
    }
}

/// The integer `c` with `image = c * target`, checked exactly.
fn eigen_ratio(image: &[BigInt], target: &[BigInt]) -> Result<i64> {
    let pivot = target
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Consistency("zero vector in cyclic span".into()))?;
    let (c, rem) = (
        &image[pivot] / &target[pivot],
        &image[pivot] % &target[pivot],
    );
    let consistent = rem.is_zero() && image.iter().zip(target).all(|(a, b)| *a == &c * b);
    if !consistent {
        return Err(Error::Consistency(
            "cyclic span is not stable under the triple".into(),
        ));
    }
    i64::try_from(c).map_err(|_| Error::Consistency("structure constant overflows".into()))
}

/// Clutching degree of the tautological bundle restricted to the orbit of
/// `[xi_k]`, computed on the irreducible summand of highest weight
/// `k(n-k+1)`.
pub fn grassmann_degree(n: usize, k: usize) -> Result<i64> {
    let m = exterior_weight(n, k)? as usize;
    let rep = build_irrep(m)?;
    winding_number(&transition_samples(&rep, default_sample_count(m))?)
}

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The `(n+1)`-dimensional irreducible representation of `sl(2, C)` in the
/// weight basis `v_0, ..., v_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepN {
    n: usize,
    x: DMatrix<i64>,
    h: DMatrix<i64>,
    y: DMatrix<i64>,
}

/// `H = diag(n, n-2, ..., -n)`, `Y v_j = v_{j+1}`, `X v_j = j(n-j+1) v_{j-1}`.
pub fn build_irrep(n: usize) -> Result<IrrepN> {
    if n == 0 {
        return Err(Error::DegenerateRepresentation);
    }
    let dim = n + 1;
    let h = DMatrix::from_fn(
        dim,
        dim,
        |i, j| {
            if i == j {
                n as i64 - 2 * i as i64
            } else {
                0
            }
        },
    );
    let y = DMatrix::from_fn(dim, dim, |i, j| i64::from(i == j + 1));
    let x = DMatrix::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            (j * (n - j + 1)) as i64
        } else {
            0
        }
    });
    Ok(IrrepN { n, x, h, y })
}

impl IrrepN {
    /// Wraps an explicit triple, checking that it is the irreducible
    /// representation of highest weight `dim - 1` in a weight basis.
    pub fn from_triple(x: DMatrix<i64>, h: DMatrix<i64>, y: DMatrix<i64>) -> Result<IrrepN> {
        let dim = h.nrows();
        if dim < 2 {
            return Err(Error::DegenerateRepresentation);
        }
        let rep = IrrepN {
            n: dim - 1,
            x,
            h,
            y,
        };
        let expected = build_irrep(dim - 1)?;
        if rep != expected {
            return Err(Error::Consistency(format!(
                "triple is not the standard irreducible representation of dimension {dim}"
            )));
        }
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
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

    /// Twice the Casimir element, `2XY + 2YX + H^2`.
    pub fn double_casimir(&self) -> DMatrix<i64> {
        (&self.x * &self.y) * 2 + (&self.y * &self.x) * 2 + &self.h * &self.h
    }
}

/// Max-abs residuals of `[H,X] - 2X`, `[H,Y] + 2Y` and `[X,Y] - H`.
pub fn bracket_residuals(x: &DMatrix<i64>, h: &DMatrix<i64>, y: &DMatrix<i64>) -> [i64; 3] {
    let max_abs = |m: DMatrix<i64>| m.iter().map(|v| v.abs()).max().unwrap_or(0);
    [
        max_abs(h * x - x * h - x * 2),
        max_abs(h * y - y * h + y * 2),
        max_abs(x * y - y * x - h),
    ]
}

/// `m * v` over big integers.
pub(crate) fn apply(m: &DMatrix<i64>, v: &[BigInt]) -> Vec<BigInt> {
    (0..m.nrows())
        .map(|i| {
            let mut acc = BigInt::zero();
            for (j, vj) in v.iter().enumerate() {
                let a = m[(i, j)];
                if a != 0 && !vj.is_zero() {
                    acc += vj * a;
                }
            }
            acc
        })
        .collect()
}

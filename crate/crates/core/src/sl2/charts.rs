//! The two Bruhat charts of the highest-weight orbit `S^2` and the clutching
//! function between the tautological sections they define.
//!
//! `y_chart(z) = exp(z Y) v_0` covers everything but `[v_n]`, and
//! `x_chart(w) = exp(w X) v_n` everything but `[v_0]`. The charts are glued by
//! `w = 1/z`, and on the unit circle `x_chart(x) = a(x) y_chart(1/x)` with
//! `a(x) = n! x^n`.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use super::irrep::{apply, IrrepN};
use crate::error::{Error, Result};
use crate::rational::{factorial, ratio_to_f64};

/// Coordinatewise relative tolerance for the two chart vectors to count as parallel.
pub const PARALLEL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ChartVector {
    pub coords: Vec<Complex64>,
}

/// Samples `a(x_k)` at `x_k = exp(2 pi i k / M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClutchSamples {
    pub points: Vec<Complex64>,
    /// Largest relative deviation from parallelism seen while sampling.
    pub max_deviation: f64,
}

impl ClutchSamples {
    pub fn from_points(points: Vec<Complex64>) -> Self {
        Self {
            points,
            max_deviation: 0.0,
        }
    }
}

pub fn default_sample_count(n: usize) -> usize {
    1024.max(16 * n)
}

/// `exp(t M) e_start` as a finite Taylor sum. `M` must be nilpotent; the
/// powers `M^k e_start / k!` are formed exactly before scaling by `t^k`.
fn exp_nilpotent_apply(m: &DMatrix<i64>, start: usize, t: Complex64) -> Result<Vec<Complex64>> {
    let dim = m.nrows();
    let mut term: Vec<BigInt> = (0..dim)
        .map(|i| BigInt::from(u8::from(i == start)))
        .collect();
    let mut out = vec![Complex64::zero(); dim];
    let mut power = Complex64::new(1.0, 0.0);
    for k in 0..=dim {
        if term.iter().all(Zero::is_zero) {
            return Ok(out);
        }
        let kf = factorial(k as u32);
        for (o, c) in out.iter_mut().zip(&term) {
            if !c.is_zero() {
                *o += power * ratio_to_f64(c, &kf);
            }
        }
        term = apply(m, &term);
        power *= t;
    }
    Err(Error::Consistency("matrix is not nilpotent".into()))
}

/// `exp(z Y) v_0 = (1, z, z^2/2!, ..., z^n/n!)`.
pub fn y_chart(rep: &IrrepN, z: Complex64) -> Result<ChartVector> {
    Ok(ChartVector {
        coords: exp_nilpotent_apply(rep.y(), 0, z)?,
    })
}

/// `exp(w X) v_n = (p_n(w), ..., p_1(w), 1)` with `p_1(w) = n w`.
pub fn x_chart(rep: &IrrepN, w: Complex64) -> Result<ChartVector> {
    Ok(ChartVector {
        coords: exp_nilpotent_apply(rep.x(), rep.n(), w)?,
    })
}

/// The scalar `a(x)` with `x_chart(x) = a(x) y_chart(1/x)`, together with the
/// largest coordinatewise relative deviation from that equation.
pub fn clutching_value(rep: &IrrepN, x: Complex64) -> Result<(Complex64, f64)> {
    let second = x_chart(rep, x)?.coords;
    let first = y_chart(rep, x.inv())?.coords;
    // Divide at the largest coordinate of the first section.
    let pivot = (0..first.len())
        .max_by(|&i, &j| first[i].norm().total_cmp(&first[j].norm()))
        .expect("dimension >= 2");
    let a = second[pivot] / first[pivot];
    let deviation = second
        .iter()
        .zip(&first)
        .map(|(s, f)| {
            let scaled = a * f;
            let scale = s.norm().max(scaled.norm());
            if scale == 0.0 {
                0.0
            } else {
                (s - scaled).norm() / scale
            }
        })
        .fold(0.0, f64::max);
    Ok((a, deviation))
}

/// Samples the clutching function on `sample_count` equally spaced points of
/// the unit circle. Requires `sample_count >= 8n` so that successive samples
/// of the degree-`n` loop are less than `pi` apart in phase.
pub fn transition_samples(rep: &IrrepN, sample_count: usize) -> Result<ClutchSamples> {
    if sample_count < 8 * rep.n() {
        return Err(Error::Undersampled(format!(
            "{sample_count} samples is below the bound 8n = {}",
            8 * rep.n()
        )));
    }
    let mut points = Vec::with_capacity(sample_count);
    let mut max_deviation = 0.0f64;
    for k in 0..sample_count {
        let x = Complex64::from_polar(1.0, TAU * k as f64 / sample_count as f64);
        let (a, deviation) = clutching_value(rep, x)?;
        if deviation > PARALLEL_TOLERANCE {
            return Err(Error::ChartMismatch {
                index: k,
                deviation,
            });
        }
        max_deviation = max_deviation.max(deviation);
        points.push(a);
    }
    Ok(ClutchSamples {
        points,
        max_deviation,
    })
}

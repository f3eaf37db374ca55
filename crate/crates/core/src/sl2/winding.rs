use std::f64::consts::{PI, TAU};

use super::charts::ClutchSamples;
use crate::error::{Error, Result};

/// Maximum allowed distance of the accumulated phase from `2 pi * degree`.
pub const WINDING_RESIDUAL_TOLERANCE: f64 = 1e-6;

/// Degree of the closed loop traced by the samples, by phase accumulation.
///
/// The loop is closed by the step from the last sample back to the first.
pub fn winding_number(samples: &ClutchSamples) -> Result<i64> {
    let points = &samples.points;
    if points.is_empty() {
        return Err(Error::Undersampled("no samples".into()));
    }
    if let Some(k) = points.iter().position(|p| p.norm() == 0.0) {
        return Err(Error::Domain(format!("sample {k} is zero")));
    }

    let mut total = 0.0;
    for (k, p) in points.iter().enumerate() {
        let next = points[(k + 1) % points.len()];
        let step = (next / p).arg();
        if step.abs() >= PI {
            return Err(Error::Undersampled(format!(
                "phase step {step} between samples {k} and {} reaches pi",
                (k + 1) % points.len()
            )));
        }
        total += step;
    }

    let degree = (total / TAU).round();
    let residual = (total - TAU * degree).abs();
    if residual >= WINDING_RESIDUAL_TOLERANCE {
        return Err(Error::NonIntegerWinding { residual });
    }
    Ok(degree as i64)
}

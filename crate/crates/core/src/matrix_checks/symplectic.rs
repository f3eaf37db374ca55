//! The compression semigroup of the cone `C = {[v] : Q(v) >= 0}` in
//! `Sp(l, R)`, where `Q(v) = v^T [Q] v` and `[Q] = [[0, I], [I, 0]]`.
//!
//! `X = [Q]` lies in `sp(l, R)` for `J = [[0, I], [-I, 0]]`, satisfies
//! `X^2 = I`, and `X^T [Q] + [Q] X = 2I`, so `Q(exp(tX) v)` is strictly
//! increasing. Block elements `diag(A, -A^T)` are `Q`-isometries, so the whole
//! block subgroup, and with it `G(alpha)` for every short root
//! `alpha = lambda_i - lambda_j`, lies in the semigroup.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use super::expm::expm;
use crate::error::{Error, Result};

/// Relative tolerance between the analytic derivative and a central difference.
pub const FD_REL_TOLERANCE: f64 = 1e-6;
/// Absolute tolerance on `|Q(exp(tY) v) - Q(v)|` for block elements `Y`.
pub const ISOMETRY_TOLERANCE: f64 = 1e-9;

const FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SympSetup {
    pub l: usize,
    pub q: DMatrix<i64>,
    pub j: DMatrix<i64>,
    pub x: DMatrix<i64>,
}

impl SympSetup {
    pub fn new(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::Precondition("l must be at least 1".into()));
        }
        let n = 2 * l;
        let q = DMatrix::from_fn(n, n, |r, c| i64::from(r + l == c || c + l == r));
        let j = DMatrix::from_fn(n, n, |r, c| {
            if r + l == c {
                1
            } else if c + l == r {
                -1
            } else {
                0
            }
        });
        Ok(Self {
            l,
            x: q.clone(),
            q,
            j,
        })
    }
}

fn max_abs(m: &DMatrix<i64>) -> i64 {
    m.iter().map(|v| v.abs()).max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub l: usize,
    /// `X^T J + J X`.
    pub sp_residual: i64,
    /// `X^T [Q] + [Q] X - 2I`.
    pub derivative_residual: i64,
    /// `[Q]^T - [Q]` and `[Q]^2 - I`.
    pub q_residual: i64,
    /// `J^T + J` and `J^2 + I`.
    pub j_residual: i64,
}

/// Checks the integer identities for `X = [Q]`.
pub fn symp_identities(l: usize) -> Result<IdentityReport> {
    let setup = SympSetup::new(l)?;
    symp_identities_for(&setup, &setup.x)
}

/// Checks the identities for an arbitrary candidate `x` against `setup`.
pub fn symp_identities_for(setup: &SympSetup, x: &DMatrix<i64>) -> Result<IdentityReport> {
    let n = 2 * setup.l;
    let id = DMatrix::<i64>::identity(n, n);
    let (q, j) = (&setup.q, &setup.j);
    let report = IdentityReport {
        l: setup.l,
        sp_residual: max_abs(&(x.transpose() * j + j * x)),
        derivative_residual: max_abs(&(x.transpose() * q + q * x - &id * 2)),
        q_residual: max_abs(&(q.transpose() - q)).max(max_abs(&(q * q - &id))),
        j_residual: max_abs(&(j.transpose() + j)).max(max_abs(&(j * j + &id))),
    };
    let failures = [
        ("X^T J + J X = 0", report.sp_residual),
        ("X^T [Q] + [Q] X = 2I", report.derivative_residual),
        ("[Q] symmetric with [Q]^2 = I", report.q_residual),
        ("J antisymmetric with J^2 = -I", report.j_residual),
    ];
    if let Some((name, residual)) = failures.into_iter().find(|&(_, r)| r != 0) {
        return Err(Error::IdentityFailure {
            name: name.into(),
            residual,
        });
    }
    Ok(report)
}

pub fn q_form(v: &DVector<f64>) -> f64 {
    let l = v.len() / 2;
    2.0 * (0..l).map(|i| v[i] * v[l + i]).sum::<f64>()
}

/// `exp(tX) v = cosh(t) v + sinh(t) X v`, valid because `X^2 = I`.
pub fn flow(t: f64, v: &DVector<f64>) -> DVector<f64> {
    let l = v.len() / 2;
    let swapped = DVector::from_fn(v.len(), |i, _| if i < l { v[l + i] } else { v[i - l] });
    v * t.cosh() + swapped * t.sinh()
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = v.norm();
        if norm > 1e-12 {
            return v / norm;
        }
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub trial: usize,
    pub t: f64,
    pub v: Vec<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MonotonicityReport {
    pub l: usize,
    pub trials: usize,
    pub grid_points: usize,
    pub violations: Vec<Counterexample>,
    pub max_fd_rel_error: f64,
    pub passes: bool,
}

/// Grid `-2, -1.95, ..., 2`.
fn monotonicity_grid() -> Vec<f64> {
    (0..=80).map(|i| -2.0 + 0.05 * f64::from(i)).collect()
}

/// Monte-Carlo check that `t -> Q(exp(tX) v)` is strictly increasing on a
/// grid in `[-2, 2]`, and that its derivative `2|exp(tX) v|^2` matches a
/// central finite difference.
pub fn q_monotonicity(l: usize, trials: usize, seed: u64) -> Result<MonotonicityReport> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is required".into()));
    }
    SympSetup::new(l)?;
    let grid = monotonicity_grid();
    let mut violations = Vec::new();
    let mut max_fd_rel_error = 0.0f64;

    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let v = random_unit(&mut rng, 2 * l);
        let values: Vec<f64> = grid.iter().map(|&t| q_form(&flow(t, &v))).collect();
        for (w, ts) in values.windows(2).zip(grid.windows(2)) {
            if w[1] <= w[0] {
                violations.push(Counterexample {
                    trial,
                    t: ts[1],
                    v: v.iter().copied().collect(),
                    detail: format!("Q drops from {} to {}", w[0], w[1]),
                });
            }
        }
        for &t in &grid {
            let analytic = 2.0 * flow(t, &v).norm_squared();
            let numeric =
                (q_form(&flow(t + FD_STEP, &v)) - q_form(&flow(t - FD_STEP, &v))) / (2.0 * FD_STEP);
            let rel = (numeric - analytic).abs() / analytic;
            max_fd_rel_error = max_fd_rel_error.max(rel);
            if analytic <= 0.0 || rel >= FD_REL_TOLERANCE {
                violations.push(Counterexample {
                    trial,
                    t,
                    v: v.iter().copied().collect(),
                    detail: format!("derivative {analytic} vs finite difference {numeric}"),
                });
            }
        }
    }
    Ok(MonotonicityReport {
        l,
        trials,
        grid_points: grid.len(),
        passes: violations.is_empty(),
        violations,
        max_fd_rel_error,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CompressionReport {
    pub l: usize,
    pub samples: usize,
    pub t_grid: Vec<f64>,
    /// Draws discarded because `Q(v) < 0`.
    pub rejected_draws: usize,
    pub violations: Vec<Counterexample>,
    pub max_isometry_error: f64,
    pub passes: bool,
}

/// Samples points of the cone and checks `exp(tX) C` inside `C` (strictly
/// inside for `t > 0`) and that `exp(tY)`, `Y = diag(A, -A^T)` with random
/// `A`, preserves `Q`. A finite-sample certificate, not a proof.
pub fn compression_check(
    l: usize,
    samples: usize,
    t_grid: &[f64],
    seed: u64,
) -> Result<CompressionReport> {
    if samples == 0 {
        return Err(Error::Precondition(
            "at least one sample is required".into(),
        ));
    }
    if let Some(t) = t_grid.iter().find(|&&t| t.is_nan() || t < 0.0) {
        return Err(Error::Precondition(format!("grid value {t} is negative")));
    }
    SympSetup::new(l)?;

    let mut rejected_draws = 0;
    let mut violations = Vec::new();
    let mut max_isometry_error = 0.0f64;

    for sample in 0..samples {
        let mut rng = trial_rng(seed, sample);
        let v = loop {
            let v = random_unit(&mut rng, 2 * l);
            if q_form(&v) >= 0.0 {
                break v;
            }
            rejected_draws += 1;
        };
        let q0 = q_form(&v);

        let scale = 1.0 / (l as f64).sqrt();
        let a = DMatrix::from_fn(l, l, |_, _| rng.sample::<f64, _>(StandardNormal) * scale);
        let mut y = DMatrix::zeros(2 * l, 2 * l);
        y.view_mut((0, 0), (l, l)).copy_from(&a);
        y.view_mut((l, l), (l, l)).copy_from(&(-a.transpose()));

        for &t in t_grid {
            let qt = q_form(&flow(t, &v));
            let contained = qt >= q0 && (t == 0.0 || qt > q0);
            if !contained {
                violations.push(Counterexample {
                    trial: sample,
                    t,
                    v: v.iter().copied().collect(),
                    detail: format!("Q(exp(tX) v) = {qt} against Q(v) = {q0}"),
                });
            }
            let moved = expm(&(&y * t)) * &v;
            let err = (q_form(&moved) - q0).abs();
            max_isometry_error = max_isometry_error.max(err);
            if err >= ISOMETRY_TOLERANCE {
                violations.push(Counterexample {
                    trial: sample,
                    t,
                    v: v.iter().copied().collect(),
                    detail: format!("block flow changes Q by {err:e}"),
                });
            }
        }
    }
    Ok(CompressionReport {
        l,
        samples,
        t_grid: t_grid.to_vec(),
        rejected_draws,
        passes: violations.is_empty(),
        violations,
        max_isometry_error,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ShortRootReport {
    pub l: usize,
    pub i: usize,
    pub j: usize,
    pub sp_residual: i64,
    pub isometry_residual: i64,
}

/// Max-abs residuals of `Y^T J + J Y` and `Y^T [Q] + [Q] Y`.
pub fn block_residuals(y: &DMatrix<i64>, l: usize) -> Result<(i64, i64)> {
    let setup = SympSetup::new(l)?;
    let yt = y.transpose();
    Ok((
        max_abs(&(&yt * &setup.j + &setup.j * y)),
        max_abs(&(&yt * &setup.q + &setup.q * y)),
    ))
}

/// Root vector of the short root `lambda_i - lambda_j`: `Y = diag(E_ij, -E_ji)`.
pub fn short_root_block(l: usize, i: usize, j: usize) -> Result<ShortRootReport> {
    if i == j || !(1..=l).contains(&i) || !(1..=l).contains(&j) {
        return Err(Error::Precondition(format!(
            "need distinct indices in 1..={l}, got ({i}, {j})"
        )));
    }
    let mut y = DMatrix::<i64>::zeros(2 * l, 2 * l);
    y[(i - 1, j - 1)] = 1;
    y[(l + j - 1, l + i - 1)] = -1;
    let (sp_residual, isometry_residual) = block_residuals(&y, l)?;
    if sp_residual != 0 {
        return Err(Error::IdentityFailure {
            name: "Y^T J + J Y = 0".into(),
            residual: sp_residual,
        });
    }
    if isometry_residual != 0 {
        return Err(Error::IdentityFailure {
            name: "Y^T [Q] + [Q] Y = 0".into(),
            residual: isometry_residual,
        });
    }
    Ok(ShortRootReport {
        l,
        i,
        j,
        sp_residual,
        isometry_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        for l in [1, 3] {
            let r = symp_identities(l).unwrap();
            assert_eq!((r.sp_residual, r.derivative_residual), (0, 0));
        }
    }

    #[test]
    fn perturbed_x_fails() {
        let setup = SympSetup::new(2).unwrap();
        let mut x = setup.x.clone();
        x[(0, 3)] += 1;
        assert!(matches!(
            symp_identities_for(&setup, &x),
            Err(Error::IdentityFailure { .. })
        ));
    }

    #[test]
    fn zero_rank_is_rejected() {
        assert!(symp_identities(0).is_err());
        assert!(q_monotonicity(0, 1, 0).is_err());
    }

    #[test]
    fn flow_from_first_basis_vector() {
        // Q(exp(tX) e_1) = sinh(2t) for l = 2.
        let mut e1 = DVector::zeros(4);
        e1[0] = 1.0;
        for t in [-2.0, -0.5, 0.0, 0.7, 2.0] {
            let f: f64 = t;
            assert!((q_form(&flow(t, &e1)) - (2.0 * f).sinh()).abs() < 1e-12);
        }
    }

    #[test]
    fn derivative_on_the_null_cone() {
        // v with Q(v) = 0 at t = 0: the derivative is 2|v|^2 = 2.
        let v = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(q_form(&v), 0.0);
        assert!((2.0 * flow(0.0, &v).norm_squared() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn monotonicity_is_deterministic() {
        let a = q_monotonicity(2, 20, 11).unwrap();
        let b = q_monotonicity(2, 20, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.passes);
    }

    #[test]
    fn compression_at_time_zero_is_exact() {
        let r = compression_check(2, 50, &[0.0], 3).unwrap();
        assert!(r.passes);
        assert!(r.max_isometry_error < 1e-15);
    }

    #[test]
    fn compression_rejects_negative_times() {
        assert!(compression_check(2, 5, &[0.0, -1.0], 0).is_err());
    }

    #[test]
    fn short_root_blocks() {
        assert!(short_root_block(2, 1, 2).is_ok());
        assert!(short_root_block(3, 3, 1).is_ok());
        assert!(short_root_block(3, 2, 2).is_err());
        assert!(short_root_block(3, 4, 1).is_err());
    }

    #[test]
    fn unbalanced_block_fails_both_identities() {
        let l = 2;
        let mut y = DMatrix::<i64>::zeros(4, 4);
        y[(0, 0)] = 1;
        y[(2, 2)] = -1;
        assert_eq!(block_residuals(&y, l).unwrap(), (0, 0));
        y[(2, 2)] = 0;
        let (sp, iso) = block_residuals(&y, l).unwrap();
        assert!(sp != 0 && iso != 0);
    }
}

//! Two proof mechanisms run as experiments.
//!
//! * The orthogonality recurrence: with `b_kl = (k+l+1)^2 a_kl`, the quantity
//!   `2 b_kl - b_{k+1,l} - b_{k,l+1}` is the `D_2` inner product of
//!   `g = sum a_kl z1^k z2^l` with `z1^k z2^l (2 - z1 - z2)`.
//! * The smooth quotient: for `p` with finitely many torus zeros,
//!   `Q = g / p` with `g = prod (2 - conj(zeta) z1 - conj(eta) z2)^N` becomes
//!   smooth on the torus for large `N`; its Fourier coefficients are sampled
//!   on a grid of roots of unity.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::operators::{check_unimodular, OperatorError};
use crate::poly::ZERO;
use crate::spaces::{norm_squared_unchecked, SpaceSpec};
use crate::Poly2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProofLabError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("|p| = {modulus:e} at ({z1}, {z2}), which is not a declared zero")]
    UndeclaredZero { z1: Complex64, z2: Complex64, modulus: f64 },
}

/// Residuals `r_kl` for `0 <= k <= k_max`, `0 <= l <= l_max`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecurrenceResidualGrid {
    pub k_max: usize,
    pub l_max: usize,
    pub residuals: Vec<Complex64>,
}

impl RecurrenceResidualGrid {
    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.residuals[k * (self.l_max + 1) + l]
    }

    pub fn max_abs(&self) -> f64 {
        self.residuals.iter().map(|r| r.norm()).fold(0.0, f64::max)
    }
}

/// `r_kl = 2 b_kl - b_{k+1,l} - b_{k,l+1}` with `b_kl = (k+l+1)^2 a_kl`.
pub fn recurrence_residuals(g: &Poly2, k_max: usize, l_max: usize) -> RecurrenceResidualGrid {
    let b = |k: usize, l: usize| {
        let w = (k + l + 1) as f64;
        g.coeff(k, l) * (w * w)
    };
    let rows = exec::map_range(k_max + 1, |k| {
        (0..=l_max)
            .map(|l| b(k, l) * 2.0 - b(k + 1, l) - b(k, l + 1))
            .collect::<Vec<_>>()
    });
    RecurrenceResidualGrid {
        k_max,
        l_max,
        residuals: rows.into_iter().flatten().collect(),
    }
}

/// `prod_j (2 - conj(zeta_j) z1 - conj(eta_j) z2)^N`; the constant `1` for
/// `N = 0` or no zeros.
pub fn build_numerator_g(zeros: &[(Complex64, Complex64)], exponent: u32) -> Result<Poly2, ProofLabError> {
    let mut g = Poly2::one();
    for &(zeta, eta) in zeros {
        check_unimodular("zeta", zeta)?;
        check_unimodular("eta", eta)?;
        let factor = Poly2::from_terms([
            (0, 0, Complex64::new(2.0, 0.0)),
            (1, 0, -zeta.conj()),
            (0, 1, -eta.conj()),
        ])
        .expect("finite");
        g = &g * &factor.pow(exponent);
    }
    Ok(g)
}

/// Pass thresholds for the smooth-quotient experiment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QThresholds {
    pub neg_freq_energy_fraction: f64,
    pub weighted_tail_ratio: f64,
    pub reconstruction_error: f64,
}

impl Default for QThresholds {
    fn default() -> Self {
        QThresholds {
            neg_freq_energy_fraction: 1e-6,
            weighted_tail_ratio: 1.05,
            reconstruction_error: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QConfig {
    /// `|p| < guard_tol * coeff_norm(p)` at a grid point is only allowed at a declared zero.
    pub guard_tol: f64,
    /// Distance within which a grid point is identified with a declared zero.
    pub zero_match_tol: f64,
    pub thresholds: QThresholds,
}

impl Default for QConfig {
    fn default() -> Self {
        QConfig {
            guard_tol: 1e-8,
            zero_match_tol: 1e-9,
            thresholds: QThresholds::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QExperimentReport {
    pub p: Poly2,
    pub torus_zeros: Vec<(Complex64, Complex64)>,
    pub exponent: u32,
    pub grid_size: usize,
    /// Share of `sum |Q^(k,l)|^2` at indices aliased from negative frequencies.
    pub neg_freq_energy_fraction: f64,
    /// `S_{2s} / S_s` for `s = grid/8`, `S_s = sum_{k,l<=s} |Q^(k,l)|^2 (k+1)^2 (l+1)^2`.
    pub weighted_tail_ratio: f64,
    /// `||g - p Q_trunc|| / ||g||` in `D_2`, `Q_trunc` keeping `k, l <= grid/4`.
    pub reconstruction_error: f64,
    /// Per-shell amplitude ratio fitted to `sum_{k+l=m} |Q^(k,l)|^2`; well
    /// below one for geometric decay.
    pub shell_decay_rate: Option<f64>,
    pub thresholds: QThresholds,
    pub passes: bool,
}

/// The report together with the coefficient grid `Q^(k,l)`, row-major in `k`.
#[derive(Debug, Clone)]
pub struct QExperiment {
    pub report: QExperimentReport,
    pub q_hat: Vec<Complex64>,
}

impl QExperiment {
    pub fn coefficient(&self, k: usize, l: usize) -> Complex64 {
        self.q_hat[k * self.report.grid_size + l]
    }
}

fn fft_rows(data: &mut [Complex64], n: usize) {
    let plan = FftPlanner::<f64>::new().plan_fft_forward(n);
    exec::for_each_row_mut(data, n, |_, row| plan.process(row));
}

fn transpose(data: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = data[i * n + j];
        }
    }
    out
}

/// Samples `Q = g / p` on the `grid x grid` torus grid, transforms, and
/// measures smoothness of `Q`.
pub fn q_experiment(
    p: &Poly2,
    zeros: &[(Complex64, Complex64)],
    exponent: u32,
    grid: usize,
    cfg: &QConfig,
) -> Result<QExperiment, ProofLabError> {
    if p.is_zero() {
        return Err(ProofLabError::Precondition("p is the zero polynomial".into()));
    }
    let g = build_numerator_g(zeros, exponent)?;
    let degree = g.total_degree().max(p.total_degree()).max(1);
    if !grid.is_power_of_two() || grid < 4 * degree || grid < 8 {
        return Err(ProofLabError::Precondition(format!(
            "grid size must be a power of two, at least 8 and at least 4 * degree = {}; got {grid}",
            4 * degree
        )));
    }

    let unit: Vec<Complex64> = (0..grid)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / grid as f64))
        .collect();
    let guard = cfg.guard_tol * p.coeff_norm();
    let declared = |z1: Complex64, z2: Complex64| {
        zeros
            .iter()
            .any(|&(a, b)| (z1 - a).norm() <= cfg.zero_match_tol && (z2 - b).norm() <= cfg.zero_match_tol)
    };

    let rows = exec::map_range(grid, |i| -> Result<Vec<Complex64>, ProofLabError> {
        let z1 = unit[i];
        let pr = p.restrict(crate::Variable::Z1, z1);
        let gr = g.restrict(crate::Variable::Z1, z1);
        unit.iter()
            .map(|&z2| {
                if declared(z1, z2) {
                    return Ok(ZERO);
                }
                let pv = pr.evaluate(z2);
                if pv.norm() < guard {
                    return Err(ProofLabError::UndeclaredZero {
                        z1,
                        z2,
                        modulus: pv.norm(),
                    });
                }
                Ok(gr.evaluate(z2) / pv)
            })
            .collect()
    });
    let mut data = Vec::with_capacity(grid * grid);
    for r in rows {
        data.extend(r?);
    }

    fft_rows(&mut data, grid);
    let mut data = transpose(&data, grid);
    fft_rows(&mut data, grid);
    let scale = 1.0 / (grid * grid) as f64;
    let q_hat: Vec<Complex64> = transpose(&data, grid).into_iter().map(|c| c * scale).collect();
    let at = |k: usize, l: usize| q_hat[k * grid + l];

    let half = grid / 2;
    let mut total = 0.0;
    let mut negative = 0.0;
    for k in 0..grid {
        for l in 0..grid {
            let e = at(k, l).norm_sqr();
            total += e;
            if k >= half || l >= half {
                negative += e;
            }
        }
    }
    let neg_freq_energy_fraction = if total > 0.0 { negative / total } else { 0.0 };

    let weighted = |s: usize| -> f64 {
        let mut acc = 0.0;
        for k in 0..=s {
            for l in 0..=s {
                let w = ((k + 1) * (l + 1)) as f64;
                acc += at(k, l).norm_sqr() * w * w;
            }
        }
        acc
    };
    let s = grid / 8;
    let base = weighted(s);
    let weighted_tail_ratio = if base > 0.0 { weighted(2 * s) / base } else { 1.0 };

    let cut = grid / 4;
    let trunc = Poly2::from_terms(
        (0..=cut)
            .flat_map(|k| (0..=cut).map(move |l| (k, l)))
            .map(|(k, l)| (k, l, at(k, l))),
    )
    .expect("finite");
    let d2 = SpaceSpec::iso(2.0);
    let residual = &g - &(p * &trunc);
    let reconstruction_error = (norm_squared_unchecked(&residual, &d2) / norm_squared_unchecked(&g, &d2)).sqrt();

    let shell_decay_rate = shell_rate(&at, cut);

    let t = cfg.thresholds;
    let passes = neg_freq_energy_fraction < t.neg_freq_energy_fraction
        && weighted_tail_ratio < t.weighted_tail_ratio
        && reconstruction_error < t.reconstruction_error;

    Ok(QExperiment {
        report: QExperimentReport {
            p: p.clone(),
            torus_zeros: zeros.to_vec(),
            exponent,
            grid_size: grid,
            neg_freq_energy_fraction,
            weighted_tail_ratio,
            reconstruction_error,
            shell_decay_rate,
            thresholds: t,
            passes,
        },
        q_hat,
    })
}

/// `q_experiment` without the coefficient grid.
pub fn q_smoothness(
    p: &Poly2,
    zeros: &[(Complex64, Complex64)],
    exponent: u32,
    grid: usize,
    cfg: &QConfig,
) -> Result<QExperimentReport, ProofLabError> {
    Ok(q_experiment(p, zeros, exponent, grid, cfg)?.report)
}

/// Log-linear fit of shell energies `E_m = sum_{k+l=m} |Q^(k,l)|^2` for
/// `1 <= m <= cut`, ignoring shells at rounding level. Returns `exp(slope / 2)`.
fn shell_rate(at: &impl Fn(usize, usize) -> Complex64, cut: usize) -> Option<f64> {
    let shells: Vec<f64> = (0..=cut)
        .map(|m| (0..=m).map(|k| at(k, m - k).norm_sqr()).sum())
        .collect();
    let top = shells.iter().cloned().fold(0.0, f64::max);
    let pts: Vec<(f64, f64)> = shells
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, e)| **e > 1e-28 * top)
        .map(|(m, e)| (m as f64, e.ln()))
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Some((0.5 * sxy / sxx).exp())
}

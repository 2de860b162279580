//! Empirical decay verdict for a squared-distance sequence `d_n^2`.
//!
//! Three models are fitted in relative least squares, each by scanning its
//! single nonlinear parameter and solving for the linear ones exactly:
//!
//! * `log`: `c / ln(n + c0)`
//! * `power`: `c (n+1)^-beta`
//! * `plateau`: `d_inf + c (n+1)^-beta`
//!
//! The plateau model nearly always fits best because it has the most
//! freedom, so it cannot decide alone. The verdict also requires the total
//! drop of the sequence to agree with the model:
//!
//! * `Decaying`: `last < drop_ratio * first`, and a zero-asymptote model fits
//!   within `fit_tol` or the plateau fit itself finds `d_inf <= plateau_floor`.
//! * `Plateau`: no such drop, `d_inf > plateau_floor` and the plateau fit is
//!   within `fit_tol`.
//! * otherwise `Inconclusive`.

use serde::{Deserialize, Serialize};

use super::ApproxError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DecayConfig {
    pub plateau_floor: f64,
    pub fit_tol: f64,
    pub drop_ratio: f64,
    /// Allowed increase between consecutive entries.
    pub monotone_slack: f64,
    pub min_len: usize,
}

impl Default for DecayConfig {
    fn default() -> Self {
        DecayConfig {
            plateau_floor: 1e-3,
            fit_tol: 5e-2,
            drop_ratio: 0.5,
            monotone_slack: 1e-10,
            min_len: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "snake_case")]
pub enum DecayLabel {
    Decaying,
    Plateau { limit_estimate: f64 },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFit {
    pub model: String,
    pub params: Vec<f64>,
    /// Root-mean-square relative residual.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayVerdict {
    pub label: DecayLabel,
    /// Model the verdict rests on.
    pub fit_model: String,
    pub fit_params: Vec<f64>,
    pub fits: Vec<ModelFit>,
    /// `last / first`.
    pub drop: f64,
}

impl DecayVerdict {
    pub fn is_plateau(&self) -> bool {
        matches!(self.label, DecayLabel::Plateau { .. })
    }

    pub fn is_decaying(&self) -> bool {
        matches!(self.label, DecayLabel::Decaying)
    }
}

/// Classifies a non-increasing sequence of squared distances.
pub fn decay_diagnostic(distance_sq: &[f64], cfg: &DecayConfig) -> Result<DecayVerdict, ApproxError> {
    if distance_sq.len() < cfg.min_len {
        return Err(ApproxError::Precondition(format!(
            "decay diagnostic needs at least {} values, got {}",
            cfg.min_len,
            distance_sq.len()
        )));
    }
    if let Some(i) = distance_sq.iter().position(|v| !v.is_finite() || *v < 0.0) {
        return Err(ApproxError::Precondition(format!(
            "entry {i} is negative or not finite"
        )));
    }
    if let Some(i) = distance_sq.windows(2).position(|w| w[1] > w[0] + cfg.monotone_slack) {
        return Err(ApproxError::Precondition(format!(
            "sequence increases at n = {}: {} -> {}",
            i + 1,
            distance_sq[i],
            distance_sq[i + 1]
        )));
    }

    let first = distance_sq[0];
    let last = *distance_sq.last().unwrap();
    if last == 0.0 {
        return Ok(DecayVerdict {
            label: DecayLabel::Decaying,
            fit_model: "exact".into(),
            fit_params: vec![],
            fits: vec![],
            drop: if first > 0.0 { 0.0 } else { 1.0 },
        });
    }
    let drop = last / first;

    let y: Vec<f64> = distance_sq.to_vec();
    let log = fit_log(&y);
    let power = fit_power(&y);
    let plateau = fit_plateau(&y);
    let d_inf = plateau.params[0];

    let zero_best = if log.residual <= power.residual { &log } else { &power };
    let dropped = last < cfg.drop_ratio * first;

    let (label, basis) = if dropped && (zero_best.residual < cfg.fit_tol || d_inf <= cfg.plateau_floor) {
        let basis = if zero_best.residual < cfg.fit_tol {
            zero_best
        } else {
            &plateau
        };
        (DecayLabel::Decaying, basis)
    } else if !dropped && d_inf > cfg.plateau_floor && plateau.residual < cfg.fit_tol {
        (DecayLabel::Plateau { limit_estimate: d_inf }, &plateau)
    } else {
        let best = [&log, &power, &plateau]
            .into_iter()
            .min_by(|a, b| a.residual.total_cmp(&b.residual))
            .unwrap();
        (DecayLabel::Inconclusive, best)
    };

    Ok(DecayVerdict {
        label,
        fit_model: basis.model.clone(),
        fit_params: basis.params.clone(),
        fits: vec![log.clone(), power.clone(), plateau.clone()],
        drop,
    })
}

/// Minimizes `g` over `[lo, hi]`: coarse grid, then golden-section refinement
/// around the best grid cell.
fn minimize_scalar(lo: f64, hi: f64, g: impl Fn(f64) -> f64) -> f64 {
    const GRID: usize = 120;
    let step = (hi - lo) / GRID as f64;
    let best = (0..=GRID)
        .map(|i| lo + step * i as f64)
        .min_by(|a, b| g(*a).total_cmp(&g(*b)))
        .unwrap();
    let (mut a, mut b) = ((best - step).max(lo), (best + step).min(hi));
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let (mut g1, mut g2) = (g(x1), g(x2));
    for _ in 0..80 {
        if g1 <= g2 {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - phi * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + phi * (b - a);
            g2 = g(x2);
        }
    }
    let mid = 0.5 * (a + b);
    [best, mid].into_iter().min_by(|p, q| g(*p).total_cmp(&g(*q))).unwrap()
}

/// Best `c` for `y ~ c u` in relative least squares, and the RMS residual.
fn scale_fit(y: &[f64], u: &[f64]) -> (f64, f64) {
    let a: Vec<f64> = u.iter().zip(y).map(|(u, y)| u / y).collect();
    let c = a.iter().sum::<f64>() / a.iter().map(|x| x * x).sum::<f64>();
    let rms = (a.iter().map(|x| (c * x - 1.0).powi(2)).sum::<f64>() / y.len() as f64).sqrt();
    (c, rms)
}

/// Best `(d, c)` for `y ~ d + c u` in relative least squares, and the RMS residual.
fn affine_fit(y: &[f64], u: &[f64]) -> (f64, f64, f64) {
    // Features 1/y and u/y against target 1.
    let (mut s11, mut s12, mut s22, mut t1, mut t2) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (&u, &y) in u.iter().zip(y) {
        let (a, b) = (1.0 / y, u / y);
        s11 += a * a;
        s12 += a * b;
        s22 += b * b;
        t1 += a;
        t2 += b;
    }
    let det = s11 * s22 - s12 * s12;
    let (d, c) = if det.abs() <= 1e-12 * s11 * s22 {
        (t1 / s11, 0.0)
    } else {
        ((t1 * s22 - t2 * s12) / det, (s11 * t2 - s12 * t1) / det)
    };
    let rms = (u
        .iter()
        .zip(y)
        .map(|(u, y)| ((d + c * u) / y - 1.0).powi(2))
        .sum::<f64>()
        / y.len() as f64)
        .sqrt();
    (d, c, rms)
}

fn fit_log(y: &[f64]) -> ModelFit {
    // c0 = 1 + e^t keeps ln(n + c0) positive at n = 0.
    let basis = |t: f64| -> Vec<f64> {
        let c0 = 1.0 + t.exp();
        (0..y.len()).map(|n| 1.0 / (n as f64 + c0).ln()).collect()
    };
    let t = minimize_scalar(-10.0, 20.0, |t| scale_fit(y, &basis(t)).1);
    let (c, residual) = scale_fit(y, &basis(t));
    ModelFit {
        model: "log".into(),
        params: vec![c, 1.0 + t.exp()],
        residual,
    }
}

fn powers(len: usize, beta: f64) -> Vec<f64> {
    (0..len).map(|n| ((n + 1) as f64).powf(-beta)).collect()
}

fn fit_power(y: &[f64]) -> ModelFit {
    let beta = minimize_scalar(0.0, 10.0, |b| scale_fit(y, &powers(y.len(), b)).1);
    let (c, residual) = scale_fit(y, &powers(y.len(), beta));
    ModelFit {
        model: "power".into(),
        params: vec![c, beta],
        residual,
    }
}

fn fit_plateau(y: &[f64]) -> ModelFit {
    let beta = minimize_scalar(1e-3, 10.0, |b| affine_fit(y, &powers(y.len(), b)).2);
    let (d, c, residual) = affine_fit(y, &powers(y.len(), beta));
    ModelFit {
        model: "plateau".into(),
        params: vec![d, c, beta],
        residual,
    }
}

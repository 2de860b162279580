//! Aberth–Ehrlich simultaneous root iteration.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Poly1, PolyError, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RootConfig {
    pub max_iterations: usize,
    /// Accepted backward error: `|r(x)| <= residual_tol * sum |a_k| |x|^k`.
    pub residual_tol: f64,
    /// Roots closer than this (relative to `max(1, |x|)`) are merged into one.
    /// Multiple roots come back from the iteration as clusters of spread
    /// roughly `eps^(1/multiplicity)`.
    pub cluster_tol: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            max_iterations: 200,
            residual_tol: 1e-10,
            cluster_tol: 1e-3,
        }
    }
}

/// All roots with multiplicity, unordered. Leading and trailing exact zeros
/// are handled directly; the rest goes through Aberth iteration.
pub fn all_roots(r: &Poly1, cfg: &RootConfig) -> Result<Vec<Complex64>, PolyError> {
    if r.is_zero() {
        return Err(PolyError::Degenerate("roots of the zero polynomial".into()));
    }
    let coeffs = r.coeffs();
    let zeros_at_origin = coeffs.iter().take_while(|c| **c == ZERO).count();
    let reduced = &coeffs[zeros_at_origin..];
    let mut roots = vec![ZERO; zeros_at_origin];
    match reduced.len() {
        0 | 1 => {}
        2 => roots.push(-reduced[0] / reduced[1]),
        _ => roots.extend(aberth(reduced, cfg)?),
    }
    Ok(roots)
}

/// Distinct roots of `r` whose modulus is within `circle_tol` of one, sorted
/// by argument. Clustered approximations of a multiple root are averaged.
pub fn roots_on_unit_circle(r: &Poly1, circle_tol: f64, cfg: &RootConfig) -> Result<Vec<Complex64>, PolyError> {
    let roots = all_roots(r, cfg)?;
    let mut distinct: Vec<Complex64> = cluster(&roots, cfg.cluster_tol)
        .into_iter()
        .map(|(z, m)| polish(r, z, m))
        .collect();
    distinct.retain(|z| (z.norm() - 1.0).abs() <= circle_tol);
    distinct.sort_by(|a, b| canonical_arg(*a).total_cmp(&canonical_arg(*b)));
    Ok(distinct)
}

/// Argument in `[0, 2pi)`; values within `1e-6` below `2pi` count as `0` so
/// that points just under the positive real axis sort first.
pub(crate) fn canonical_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a >= 0.0 {
        a
    } else if a > -1e-6 {
        0.0
    } else {
        a + 2.0 * PI
    }
}

/// Groups with their size as a multiplicity estimate.
fn cluster(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for &z in roots {
        let scale = z.norm().max(1.0);
        match groups
            .iter_mut()
            .find(|g| g.iter().any(|w| (w - z).norm() <= tol * scale))
        {
            Some(g) => g.push(z),
            None => groups.push(vec![z]),
        }
    }
    groups
        .into_iter()
        .map(|g| (g.iter().sum::<Complex64>() / g.len() as f64, g.len()))
        .collect()
}

/// A root of multiplicity `m` is a simple root of the `(m-1)`-th derivative;
/// a few Newton steps there remove the bias of the cluster mean.
fn polish(r: &Poly1, z: Complex64, m: usize) -> Complex64 {
    if m < 2 {
        return z;
    }
    let mut d = r.clone();
    for _ in 1..m {
        d = d.derivative();
    }
    let mut x = z;
    for _ in 0..8 {
        let (p, dp) = eval_with_derivative(d.coeffs(), x);
        let step = p / dp;
        if !step.is_finite() || step.norm() > 1e-2 * x.norm().max(1.0) {
            break;
        }
        x -= step;
        if step.norm() <= 4.0 * f64::EPSILON * x.norm().max(1.0) {
            break;
        }
    }
    x
}

fn eval_with_derivative(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn backward_scale(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

fn aberth(c: &[Complex64], cfg: &RootConfig) -> Result<Vec<Complex64>, PolyError> {
    let n = c.len() - 1;
    let lead = c[n].norm();
    // Geometric mean of the root moduli sets the starting circle.
    let radius = (c[0].norm() / lead).powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64 + 0.4;
            let wobble = 1.0 + 0.01 * ((k % 3) as f64 - 1.0);
            Complex64::from_polar(radius * wobble, theta)
        })
        .collect();

    let mut iterations = 0;
    while iterations < cfg.max_iterations {
        iterations += 1;
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(c, z[i]);
            if p == ZERO {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step <= 4.0 * f64::EPSILON {
            break;
        }
    }

    let residuals: Vec<f64> = z
        .iter()
        .map(|&x| eval_with_derivative(c, x).0.norm() / backward_scale(c, x))
        .collect();
    // Multiple roots stall with steps at noise level, so the residual test
    // decides acceptance rather than the step criterion.
    if residuals.iter().all(|&r| r <= cfg.residual_tol) {
        return Ok(z);
    }
    Err(PolyError::RootsNotConverged {
        iterations,
        iterates: z.into_iter().zip(residuals).collect(),
    })
}

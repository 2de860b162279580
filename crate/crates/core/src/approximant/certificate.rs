//! Lower bound on `dist(1, [f])` when `f` vanishes at a torus point.
//!
//! For `alpha > 2` point evaluation at any `w` in the closed bidisk is bounded:
//! `|g(w)|^2 <= ||g||^2 * sum_{k,l} (k+l+1)^{-alpha} = ||g||^2 * zeta(alpha - 1)`.
//! If `f(w) = 0` then `(q f - 1)(w) = -1` for every polynomial `q`, so
//! `||q f - 1|| >= 1 / sqrt(zeta(alpha - 1))`.

use super::ApproxError;

/// Riemann zeta for real `s > 1`, by Euler–Maclaurin summation.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 1.0, "zeta needs s > 1, got {s}");
    const N: usize = 12;
    // B_2k / (2k)!
    const B_OVER_FACT: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
    ];
    let nf = N as f64;
    let head: f64 = (1..N).map(|n| (n as f64).powf(-s)).sum();
    let mut tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
    // Rising product s (s+1) ... (s + 2k - 2) times N^{-s-2k+1}.
    let mut rising = s;
    let mut power = nf.powf(-s - 1.0);
    for (k, b) in B_OVER_FACT.iter().enumerate() {
        tail += b * rising * power;
        let j = 2.0 * k as f64;
        rising *= (s + j + 1.0) * (s + j + 2.0);
        power /= nf * nf;
    }
    head + tail
}

/// `1 / sqrt(zeta(alpha - 1))`, the certified floor for every `d_n` of any
/// `f` with a zero on the torus.
pub fn evaluation_bound_certificate(alpha: f64) -> Result<f64, ApproxError> {
    if !alpha.is_finite() || alpha <= 2.0 {
        return Err(ApproxError::Precondition(format!(
            "evaluation certificate needs alpha > 2, got {alpha}"
        )));
    }
    Ok(1.0 / zeta(alpha - 1.0).sqrt())
}

//! Resultant with respect to `z2` by evaluation and interpolation.
//!
//! Both polynomials are evaluated at `D + 1` roots of unity in `z1`, where
//! `D = deg_z2(p) * deg_z1(q) + deg_z2(q) * deg_z1(p)` bounds the degree of the
//! resultant. Each evaluation gives a numeric Sylvester determinant; the
//! coefficients come back through an inverse DFT.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::{Poly1, Poly2, PolyError, Variable, ZERO};
use crate::{exec, linalg};

/// Default relative threshold below which a resultant counts as identically zero.
pub const ZERO_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Resultant {
    /// Interpolated coefficients, unfiltered.
    pub poly: Poly1,
    /// `||p||^deg_z2(q) * ||q||^deg_z2(p)` (coefficient 2-norms); the
    /// Hadamard-type bound the zero test is measured against.
    pub scale: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultantStatus {
    /// Every coefficient is below `threshold * scale`.
    Zero,
    /// Within a factor of ten above the zero threshold.
    Borderline,
    NonZero,
}

impl Resultant {
    pub fn max_coeff(&self) -> f64 {
        self.poly.max_abs_coeff()
    }

    pub fn status(&self, threshold: f64) -> ResultantStatus {
        let m = self.max_coeff();
        let t = threshold * self.scale;
        if m <= t {
            ResultantStatus::Zero
        } else if m <= 10.0 * t {
            ResultantStatus::Borderline
        } else {
            ResultantStatus::NonZero
        }
    }

    /// Coefficients with interpolation noise (below `1e-11` of the largest)
    /// removed, so the degree reflects the true resultant.
    pub fn trimmed(&self) -> Poly1 {
        let cut = 1e-11 * self.max_coeff();
        let coeffs = self
            .poly
            .coeffs()
            .iter()
            .map(|&c| if c.norm() <= cut { ZERO } else { c })
            .collect();
        Poly1::new(coeffs).expect("finite")
    }
}

/// `Res_z2(p, q)` as a polynomial in `z1`, using the Sylvester matrix with
/// the rows of `p` first.
pub fn resultant_z2(p: &Poly2, q: &Poly2) -> Result<Resultant, PolyError> {
    let (mp, a) = p.bidegree();
    let (mq, b) = q.bidegree();
    if a == 0 || b == 0 {
        return Err(PolyError::Degenerate(format!(
            "resultant in z2 needs positive z2-degree on both inputs (got {a} and {b})"
        )));
    }
    let degree_bound = a * mq + b * mp;
    let npts = degree_bound + 1;
    let size = a + b;

    let values: Vec<Complex64> = exec::map_range(npts, |j| {
        let x = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / npts as f64);
        let pc = coefficients_in_z2(p, x);
        let qc = coefficients_in_z2(q, x);
        linalg::determinant(sylvester(&pc, &qc), size)
    });

    let mut spectrum = values;
    FftPlanner::<f64>::new().plan_fft_forward(npts).process(&mut spectrum);
    let inv_n = 1.0 / npts as f64;
    for c in spectrum.iter_mut() {
        *c *= inv_n;
    }

    let scale = p.coeff_norm().powi(b as i32) * q.coeff_norm().powi(a as i32);
    Ok(Resultant {
        poly: Poly1::new(spectrum)?,
        scale,
    })
}

/// Coefficients of `p(x, z2)` in ascending powers of `z2`.
fn coefficients_in_z2(p: &Poly2, x: Complex64) -> Vec<Complex64> {
    let (m, n) = p.bidegree();
    (0..=n)
        .map(|l| (0..=m).rev().fold(ZERO, |acc, k| acc * x + p.coeff(k, l)))
        .collect()
}

/// Formal Sylvester matrix; leading coefficients are used even when they
/// vanish at the evaluation point, so every sample has the same size.
fn sylvester(pc: &[Complex64], qc: &[Complex64]) -> Vec<Complex64> {
    let a = pc.len() - 1;
    let b = qc.len() - 1;
    let size = a + b;
    let mut s = vec![ZERO; size * size];
    for row in 0..b {
        for (j, c) in pc.iter().rev().enumerate() {
            s[row * size + row + j] = *c;
        }
    }
    for row in 0..a {
        for (j, c) in qc.iter().rev().enumerate() {
            s[(b + row) * size + row + j] = *c;
        }
    }
    s
}

impl Poly2 {
    /// Restriction to a line `{var = value}` as a polynomial in the other variable.
    pub(crate) fn restrict(&self, var: Variable, value: Complex64) -> Poly1 {
        let (m, n) = self.bidegree();
        let coeffs = match var {
            Variable::Z1 => coefficients_in_z2(self, value),
            Variable::Z2 => (0..=m)
                .map(|k| (0..=n).rev().fold(ZERO, |acc, l| acc * value + self.coeff(k, l)))
                .collect(),
        };
        Poly1::new(coeffs).expect("finite")
    }
}

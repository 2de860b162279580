//! Structural maps between polynomial spaces: slices, diagonal restriction,
//! reflection through the torus, rotations and the `z -> z1 z2` embedding.
//! All act exactly on coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Poly1, Poly2, Variable, ZERO};

/// Unimodularity tolerance for rotation phases and torus points.
pub const UNIMODULAR_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OperatorError {
    #[error("reflection of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("{name} = {value} is not unimodular (| |{name}| - 1 | = {deviation:e})")]
    NotUnimodular {
        name: &'static str,
        value: Complex64,
        deviation: f64,
    },
}

pub(crate) fn check_unimodular(name: &'static str, value: Complex64) -> Result<(), OperatorError> {
    let deviation = (value.norm() - 1.0).abs();
    if deviation > UNIMODULAR_TOL {
        return Err(OperatorError::NotUnimodular { name, value, deviation });
    }
    Ok(())
}

/// Which variable is frozen, and at what value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlicePoint {
    pub which: Variable,
    pub value: Complex64,
}

impl SlicePoint {
    pub fn fix_z1(value: Complex64) -> Self {
        SlicePoint {
            which: Variable::Z1,
            value,
        }
    }

    pub fn fix_z2(value: Complex64) -> Self {
        SlicePoint {
            which: Variable::Z2,
            value,
        }
    }
}

/// `f(w, .)` or `f(., w)` as a polynomial in the free variable.
pub fn slice(f: &Poly2, at: SlicePoint) -> Poly1 {
    f.restrict(at.which, at.value)
}

/// `f(z, z)`: coefficient `n` is the anti-diagonal sum `sum_{k+l=n} a_kl`.
pub fn diagonal(f: &Poly2) -> Poly1 {
    let (m, n) = f.bidegree();
    let mut b = vec![ZERO; m + n + 1];
    for (k, l, c) in f.terms() {
        b[k + l] += c;
    }
    Poly1::new(b).expect("finite")
}

/// `z1^m z2^n conj(f(1/conj z1, 1/conj z2))` for the tight bidegree `(m, n)`.
/// On the torus `|reflect(f)| = |f|`.
pub fn reflect(f: &Poly2) -> Result<Poly2, OperatorError> {
    if f.is_zero() {
        return Err(OperatorError::ZeroPolynomial);
    }
    let (m, n) = f.bidegree();
    Ok(f.map_coeffs(|k, l, _| f.coeff(m - k, n - l).conj()))
}

/// `f(zeta z1, eta z2)`: coefficient `a_kl` becomes `zeta^k eta^l a_kl`.
pub fn rotate(f: &Poly2, zeta: Complex64, eta: Complex64) -> Result<Poly2, OperatorError> {
    check_unimodular("zeta", zeta)?;
    check_unimodular("eta", eta)?;
    Ok(f.map_coeffs(|k, l, c| c * zeta.powu(k as u32) * eta.powu(l as u32)))
}

/// `F(z1, z2) = f(z1 z2)`: coefficient `a_m` moves to grid position `(m, m)`.
pub fn embed_diagonal_sub(f: &Poly1) -> Poly2 {
    Poly2::from_terms(f.coeffs().iter().enumerate().map(|(m, &c)| (m, m, c))).expect("finite")
}

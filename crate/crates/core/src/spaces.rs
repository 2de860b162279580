//! Weighted sequence-space structure on polynomial coefficients.
//!
//! * `Iso`: weight `(k+l+1)^alpha` on `z1^k z2^l` (the space `D_alpha` of the bidisk)
//! * `Aniso`: weight `(k+1)^alpha (l+1)^alpha`
//! * `Uni`: weight `(k+1)^alpha` on `z^k`, one variable (`z1`)

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Poly1, Poly2, Variable, ZERO};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpaceError {
    #[error("alpha must be finite, got {0}")]
    NonFiniteAlpha(f64),
    #[error("univariate space has no index ({k}, {l}) with l > 0")]
    UnivariateIndex { k: usize, l: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceKind {
    Iso,
    Aniso,
    Uni,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub kind: SpaceKind,
    pub alpha: f64,
}

impl SpaceSpec {
    pub fn new(kind: SpaceKind, alpha: f64) -> Result<Self, SpaceError> {
        if !alpha.is_finite() {
            return Err(SpaceError::NonFiniteAlpha(alpha));
        }
        Ok(SpaceSpec { kind, alpha })
    }

    /// Panics on non-finite `alpha`; use [`SpaceSpec::new`] for untrusted input.
    pub fn iso(alpha: f64) -> Self {
        Self::new(SpaceKind::Iso, alpha).expect("finite alpha")
    }

    pub fn aniso(alpha: f64) -> Self {
        Self::new(SpaceKind::Aniso, alpha).expect("finite alpha")
    }

    pub fn uni(alpha: f64) -> Self {
        Self::new(SpaceKind::Uni, alpha).expect("finite alpha")
    }

    pub fn weight(&self, k: usize, l: usize) -> Result<f64, SpaceError> {
        if self.kind == SpaceKind::Uni && l > 0 {
            return Err(SpaceError::UnivariateIndex { k, l });
        }
        Ok(self.weight_unchecked(k, l))
    }

    /// Weight without the univariate index check; `Uni` ignores `l`.
    pub(crate) fn weight_unchecked(&self, k: usize, l: usize) -> f64 {
        match self.kind {
            SpaceKind::Iso => int_power((k + l + 1) as f64, self.alpha),
            SpaceKind::Aniso => int_power((k + 1) as f64, self.alpha) * int_power((l + 1) as f64, self.alpha),
            SpaceKind::Uni => int_power((k + 1) as f64, self.alpha),
        }
    }

    fn check_support(&self, f: &Poly2) -> Result<(), SpaceError> {
        if self.kind == SpaceKind::Uni && f.depends_on(Variable::Z2) {
            let (k, l) = f.terms().find(|t| t.1 > 0).map(|t| (t.0, t.1)).unwrap();
            return Err(SpaceError::UnivariateIndex { k, l });
        }
        Ok(())
    }
}

/// `base^alpha` for a positive integer-valued base. Integer exponents in
/// `[-8, 8]` use repeated multiplication so small cases stay exact.
pub(crate) fn int_power(base: f64, alpha: f64) -> f64 {
    if alpha.fract() == 0.0 && alpha.abs() <= 8.0 {
        let e = alpha.abs() as u32;
        let mut v = 1.0;
        for _ in 0..e {
            v *= base;
        }
        if alpha < 0.0 {
            1.0 / v
        } else {
            v
        }
    } else {
        (alpha * base.ln()).exp()
    }
}

/// `weight(space, k, l)`.
pub fn weight(space: &SpaceSpec, k: usize, l: usize) -> Result<f64, SpaceError> {
    space.weight(k, l)
}

/// `sum_{k,l} w(k,l) f_kl conj(g_kl)`.
pub fn inner_product(f: &Poly2, g: &Poly2, space: &SpaceSpec) -> Result<Complex64, SpaceError> {
    space.check_support(f)?;
    space.check_support(g)?;
    let (m1, n1) = f.bidegree();
    let (m2, n2) = g.bidegree();
    let mut acc = ZERO;
    for k in 0..=m1.min(m2) {
        for l in 0..=n1.min(n2) {
            let a = f.coeff(k, l);
            let b = g.coeff(k, l);
            if a != ZERO && b != ZERO {
                acc += a * b.conj() * space.weight_unchecked(k, l);
            }
        }
    }
    Ok(acc)
}

pub fn norm_squared(f: &Poly2, space: &SpaceSpec) -> Result<f64, SpaceError> {
    space.check_support(f)?;
    Ok(norm_squared_unchecked(f, space))
}

pub(crate) fn norm_squared_unchecked(f: &Poly2, space: &SpaceSpec) -> f64 {
    f.terms()
        .map(|(k, l, c)| space.weight_unchecked(k, l) * c.norm_sqr())
        .sum()
}

/// Squared `D_alpha` norm of a one-variable polynomial, weights `(k+1)^alpha`.
pub fn norm_squared_uni(f: &Poly1, alpha: f64) -> f64 {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| int_power((k + 1) as f64, alpha) * c.norm_sqr())
        .sum()
}

/// Squared norms of one polynomial in the three comparable scales.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormTriple {
    /// Isotropic space with parameter `alpha`.
    pub iso: f64,
    /// Anisotropic space with parameter `alpha`.
    pub aniso: f64,
    /// Isotropic space with parameter `2 alpha`.
    pub iso2x: f64,
}

impl NormTriple {
    /// `iso <= aniso <= iso2x` for `alpha >= 0`, reversed for `alpha <= 0`,
    /// up to `slack` relative to the largest entry.
    pub fn is_ordered(&self, alpha: f64, slack: f64) -> bool {
        let s = slack * self.iso.max(self.aniso).max(self.iso2x);
        if alpha >= 0.0 {
            self.iso <= self.aniso + s && self.aniso <= self.iso2x + s
        } else {
            self.iso2x <= self.aniso + s && self.aniso <= self.iso + s
        }
    }
}

pub fn compare_norms(f: &Poly2, alpha: f64) -> Result<NormTriple, SpaceError> {
    Ok(NormTriple {
        iso: norm_squared(f, &SpaceSpec::new(SpaceKind::Iso, alpha)?)?,
        aniso: norm_squared(f, &SpaceSpec::new(SpaceKind::Aniso, alpha)?)?,
        iso2x: norm_squared(f, &SpaceSpec::new(SpaceKind::Iso, 2.0 * alpha)?)?,
    })
}

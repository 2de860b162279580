//! Cyclicity prediction from the zero sets of an irreducible polynomial, and
//! its confrontation with the computed distances `d_n = dist(1, f P_n)`.
//!
//! Without zeros in the open bidisk, `f` is cyclic in `D_alpha` for
//! `alpha <= 1`; for `1 < alpha <= 2` iff its torus zero set is empty or
//! finite; for `alpha > 2` iff the torus zero set is empty.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::approximant::{
    decay_diagnostic, distance_table, evaluation_bound_certificate, ApproxError, BasisFamily, DecayConfig,
    DecayVerdict, DistancePoint,
};
use crate::spaces::SpaceSpec;
use crate::zeroset::{
    bidisk_zero_search, torus_zeros, BidiskConfig, BidiskZeroReport, TorusConfig, TorusZeroClass, ZeroSetError,
};
use crate::Poly2;

/// A heuristic bidisk minimum below this multiple of `coeff_norm(p)`, without
/// a certified zero, makes the prediction not applicable.
pub const BIDISK_INCONCLUSIVE_TOL: f64 = 1e-6;

/// Slack allowed below the evaluation certificate.
pub const CERTIFICATE_SLACK: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassifyError {
    #[error("the zero polynomial cannot be classified")]
    ZeroPolynomial,
    #[error(transparent)]
    Approx(#[from] ApproxError),
    #[error(transparent)]
    ZeroSet(#[from] ZeroSetError),
    #[error("report invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Prediction {
    Cyclic,
    NotCyclic,
    NotApplicable { reason: String },
}

impl Prediction {
    pub fn label(&self) -> &'static str {
        match self {
            Prediction::Cyclic => "cyclic",
            Prediction::NotCyclic => "not_cyclic",
            Prediction::NotApplicable { .. } => "not_applicable",
        }
    }
}

/// Cyclicity predicted from the zero sets of an irreducible `p`. `torus` is `None` when
/// the torus classification itself was inconclusive.
pub fn predict(p: &Poly2, alpha: f64, torus: Option<&TorusZeroClass>, bidisk: &BidiskZeroReport) -> Prediction {
    match bidisk {
        BidiskZeroReport::ZeroFound { .. } => return Prediction::NotCyclic,
        BidiskZeroReport::NoneFoundHeuristic { min_modulus, grid, .. } => {
            if *min_modulus <= BIDISK_INCONCLUSIVE_TOL * p.coeff_norm() {
                return Prediction::NotApplicable {
                    reason: format!(
                        "bidisk minimum {min_modulus:e} is near zero but not certified at {}x{} resolution",
                        grid.radii, grid.angles
                    ),
                };
            }
        }
    }
    if alpha <= 1.0 {
        return Prediction::Cyclic;
    }
    let Some(torus) = torus else {
        return Prediction::NotApplicable {
            reason: "torus zero set could not be classified".into(),
        };
    };
    let cyclic = if alpha <= 2.0 {
        torus.is_at_most_finite()
    } else {
        torus.is_empty()
    };
    if cyclic {
        Prediction::Cyclic
    } else {
        Prediction::NotCyclic
    }
}

/// `f = g h` is cyclic iff every factor is. Any non-cyclic factor decides;
/// otherwise an inapplicable factor leaves the product inapplicable.
pub fn product_rule<'a, I>(factors: I) -> Prediction
where
    I: IntoIterator<Item = &'a Prediction>,
{
    let mut seen = false;
    let mut pending = None;
    for f in factors {
        seen = true;
        match f {
            Prediction::NotCyclic => return Prediction::NotCyclic,
            Prediction::NotApplicable { reason } => {
                pending.get_or_insert_with(|| reason.clone());
            }
            Prediction::Cyclic => {}
        }
    }
    match (seen, pending) {
        (false, _) => Prediction::NotApplicable {
            reason: "empty factor list".into(),
        },
        (true, Some(reason)) => Prediction::NotApplicable {
            reason: format!("a factor is not classifiable: {reason}"),
        },
        (true, None) => Prediction::Cyclic,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ClassifyConfig {
    pub torus: TorusConfig,
    pub bidisk: BidiskConfig,
    pub decay: DecayConfig,
    /// Basis family for the distance sequence; by default `DiagonalOnly` for
    /// polynomials in `z1 z2` alone and `TotalDegree` otherwise.
    pub family: Option<BasisFamily>,
}

/// Default `n_max` for the distance sequence.
pub const DEFAULT_N_MAX: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub polynomial: Poly2,
    pub alpha: f64,
    pub bidisk_check: BidiskZeroReport,
    /// `None` when the torus classification was inconclusive; see `torus_note`.
    pub torus_class: Option<TorusZeroClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_note: Option<String>,
    pub predicted: Prediction,
    pub family: BasisFamily,
    /// Squared distances `d_n^2`, `n = 0..=n_max`.
    pub distances_sq: Vec<f64>,
    pub empirical: Option<DecayVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empirical_note: Option<String>,
    pub certificate: Option<f64>,
    pub consistent: Option<bool>,
}

impl ClassificationReport {
    pub fn distances(&self) -> Vec<f64> {
        self.distances_sq.iter().map(|d| d.sqrt()).collect()
    }

    /// Checks the report-level invariants.
    pub fn check(&self) -> Result<(), ClassifyError> {
        if self.bidisk_check.zero_found() && self.predicted != Prediction::NotCyclic {
            return Err(ClassifyError::Invariant(
                "zero found in the bidisk but prediction is not `not_cyclic`".into(),
            ));
        }
        if let Some(c) = self.certificate {
            if let Some((n, d)) = self
                .distances()
                .into_iter()
                .enumerate()
                .find(|(_, d)| *d < c - CERTIFICATE_SLACK)
            {
                return Err(ClassifyError::Invariant(format!(
                    "d_{n} = {d} lies below the certificate {c}"
                )));
            }
        }
        Ok(())
    }
}

fn is_diagonal(p: &Poly2) -> bool {
    p.terms().all(|(k, l, _)| k == l)
}

/// Full pipeline: bidisk search, torus classification, prediction, distance
/// sequence, decay diagnostic and, for `alpha > 2` with torus zeros, the
/// evaluation certificate.
///
/// `consistent` is true when a cyclic prediction meets no plateau, or a
/// non-cyclic prediction meets no decay.
pub fn corroborate(
    p: &Poly2,
    alpha: f64,
    n_max: usize,
    cfg: &ClassifyConfig,
) -> Result<ClassificationReport, ClassifyError> {
    if p.is_zero() {
        return Err(ClassifyError::ZeroPolynomial);
    }
    let space = SpaceSpec::new(crate::spaces::SpaceKind::Iso, alpha).map_err(ApproxError::from)?;

    let bidisk_check = bidisk_zero_search(p, &cfg.bidisk);
    let (torus_class, torus_note) = match torus_zeros(p, &cfg.torus) {
        Ok(t) => (Some(t), None),
        Err(ZeroSetError::Constant) => (Some(TorusZeroClass::Empty), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let predicted = predict(p, alpha, torus_class.as_ref(), &bidisk_check);

    let family = cfg.family.unwrap_or(if is_diagonal(p) {
        BasisFamily::DiagonalOnly
    } else {
        BasisFamily::TotalDegree
    });
    let table: Vec<DistancePoint> = distance_table(p, &space, family, n_max)?;
    let distances_sq: Vec<f64> = table.iter().map(|r| r.distance_sq).collect();

    let (empirical, empirical_note) = match decay_diagnostic(&distances_sq, &cfg.decay) {
        Ok(v) => (Some(v), None),
        Err(ApproxError::Precondition(msg)) => (None, Some(msg)),
        Err(e) => return Err(e.into()),
    };

    let has_torus_zero = torus_class.as_ref().is_none_or(|t| !t.is_empty());
    let certificate = if alpha > 2.0 && has_torus_zero {
        Some(evaluation_bound_certificate(alpha)?)
    } else {
        None
    };

    let consistent = empirical.as_ref().and_then(|v| match predicted {
        Prediction::Cyclic => Some(!v.is_plateau()),
        Prediction::NotCyclic => Some(!v.is_decaying()),
        Prediction::NotApplicable { .. } => None,
    });

    let report = ClassificationReport {
        polynomial: p.clone(),
        alpha,
        bidisk_check,
        torus_class,
        torus_note,
        predicted,
        family,
        distances_sq,
        empirical,
        empirical_note,
        certificate,
        consistent,
    };
    report.check()?;
    Ok(report)
}

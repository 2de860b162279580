use serde::{Deserialize, Serialize};

use dircyc::approximant::{distance_table, optimal_approximant, BasisFamily, DistancePoint};
use dircyc::classify::{corroborate, product_rule, ClassificationReport, ClassifyConfig, Prediction};
use dircyc::exec;
use dircyc::prooflab::{q_experiment, recurrence_residuals};
use dircyc::spaces::{compare_norms, SpaceSpec};
use dircyc::zeroset::{bidisk_zero_search, torus_zeros, BidiskZeroReport, TorusZeroClass, ZeroSetError};
use dircyc::{Complex64, Poly2};

use crate::output::{g12, write_csv, write_json, write_lines};
use crate::{load_overrides, parse_constant, parse_poly, CliError, Command, Overrides, EXIT_INCONCLUSIVE};

/// Output of `zeros`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZerosReport {
    pub polynomial: Poly2,
    /// Absent when the classification was inconclusive; see `torus_note`.
    #[serde(flatten)]
    pub torus: Option<TorusZeroClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus_note: Option<String>,
    pub bidisk_check: BidiskZeroReport,
}

/// Output of `classify --factor ...` at one `alpha`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorReport {
    pub alpha: f64,
    pub factors: Vec<ClassificationReport>,
    pub predicted: Prediction,
}

fn numerical(e: impl std::fmt::Display) -> CliError {
    CliError::Numerical(e.to_string())
}

fn space(alpha: f64) -> Result<SpaceSpec, CliError> {
    if alpha.is_finite() {
        Ok(SpaceSpec::iso(alpha))
    } else {
        Err(CliError::Usage(format!("alpha must be finite, got {alpha}")))
    }
}

pub fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Norm { input, common, alpha } => {
            let p = input.load()?;
            let mut lines = Vec::new();
            for a in alpha {
                space(a)?;
                let t = compare_norms(&p, a).map_err(numerical)?;
                lines.push(format!("alpha {}", g12(a)));
                lines.push(format!("iso {}", g12(t.iso)));
                lines.push(format!("aniso {}", g12(t.aniso)));
                lines.push(format!("iso2x {}", g12(t.iso2x)));
            }
            write_lines(common.output.as_deref(), lines)?;
            Ok(0)
        }
        Command::Opa {
            input,
            common,
            alpha,
            basis,
        } => {
            let p = input.load()?;
            let r = optimal_approximant(&p, basis.0, &space(alpha)?).map_err(numerical)?;
            write_json(common.output.as_deref(), &r)?;
            Ok(0)
        }
        Command::Scan {
            input,
            common,
            alpha,
            nmax,
            basis,
        } => {
            let p = input.load()?;
            let mut alphas = alpha;
            alphas.sort_by(f64::total_cmp);
            alphas.dedup();
            for &a in &alphas {
                space(a)?;
            }
            let family = BasisFamily::from(basis);
            let tables: Vec<Result<Vec<DistancePoint>, _>> =
                exec::map_slice(&alphas, |&a| distance_table(&p, &SpaceSpec::iso(a), family, nmax));
            let mut rows = Vec::new();
            for (a, t) in alphas.iter().zip(tables) {
                for r in t.map_err(numerical)? {
                    rows.push(vec![
                        g12(*a),
                        r.n.to_string(),
                        r.basis_size.to_string(),
                        g12(r.distance_sq),
                        g12(r.distance()),
                    ]);
                }
            }
            write_csv(
                common.output.as_deref(),
                &["alpha", "n", "basis_size", "distance_sq", "distance"],
                rows,
            )?;
            Ok(0)
        }
        Command::Zeros { input, common } => {
            let p = input.load()?;
            let cfg = load_overrides(common.config.as_deref())?;
            let (torus, torus_note, code) = match torus_zeros(&p, &cfg.torus) {
                Ok(t) => (Some(t), None, 0),
                Err(ZeroSetError::Constant) => (Some(TorusZeroClass::Empty), None, 0),
                Err(e @ ZeroSetError::Inconclusive(_)) => (None, Some(e.to_string()), EXIT_INCONCLUSIVE),
                Err(e) => return Err(numerical(e)),
            };
            let report = ZerosReport {
                bidisk_check: bidisk_zero_search(&p, &cfg.bidisk),
                polynomial: p,
                torus,
                torus_note,
            };
            write_json(common.output.as_deref(), &report)?;
            Ok(code)
        }
        Command::Classify {
            input,
            common,
            alpha,
            nmax,
            basis,
            factors,
        } => {
            let cfg = load_overrides(common.config.as_deref())?;
            let ccfg = classify_config(&cfg, basis.map(BasisFamily::from));
            for &a in &alpha {
                space(a)?;
            }
            if factors.is_empty() {
                let p = input
                    .load()?
                    .ok_or_else(|| CliError::Usage("a polynomial is required (-p, --poly-json or --factor)".into()))?;
                let reports = exec::map_slice(&alpha, |&a| corroborate(&p, a, nmax, &ccfg))
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(numerical)?;
                let inconclusive = reports
                    .iter()
                    .any(|r| matches!(r.predicted, Prediction::NotApplicable { .. }));
                match reports.as_slice() {
                    [one] => write_json(common.output.as_deref(), one)?,
                    many => write_json(common.output.as_deref(), &many)?,
                }
                Ok(if inconclusive { EXIT_INCONCLUSIVE } else { 0 })
            } else {
                let polys = factors.iter().map(|f| parse_poly(f)).collect::<Result<Vec<_>, _>>()?;
                let mut out = Vec::new();
                for &a in &alpha {
                    let reports = exec::map_slice(&polys, |f| corroborate(f, a, nmax, &ccfg))
                        .into_iter()
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(numerical)?;
                    let predicted = product_rule(reports.iter().map(|r| &r.predicted));
                    out.push(FactorReport {
                        alpha: a,
                        factors: reports,
                        predicted,
                    });
                }
                let inconclusive = out
                    .iter()
                    .any(|r| matches!(r.predicted, Prediction::NotApplicable { .. }));
                match out.as_slice() {
                    [one] => write_json(common.output.as_deref(), one)?,
                    many => write_json(common.output.as_deref(), &many)?,
                }
                Ok(if inconclusive { EXIT_INCONCLUSIVE } else { 0 })
            }
        }
        Command::Recurrence {
            input,
            common,
            kmax,
            lmax,
        } => {
            let g = input.load()?;
            let (m, n) = g.bidegree();
            let grid = recurrence_residuals(&g, kmax.unwrap_or(m), lmax.unwrap_or(n));
            let rows = (0..=grid.k_max).flat_map(|k| {
                let grid = &grid;
                (0..=grid.l_max).map(move |l| {
                    let r = grid.get(k, l);
                    vec![k.to_string(), l.to_string(), g12(r.re), g12(r.im)]
                })
            });
            write_csv(common.output.as_deref(), &["k", "l", "re", "im"], rows)?;
            Ok(0)
        }
        Command::Qsmooth {
            input,
            common,
            zeros,
            exponent,
            grid,
            qhat,
        } => {
            let p = input.load()?;
            let cfg = load_overrides(common.config.as_deref())?;
            let zeros = if zeros.is_empty() {
                detected_zeros(&p, &cfg)?
            } else {
                zeros.iter().map(|z| parse_zero(z)).collect::<Result<Vec<_>, _>>()?
            };
            let x = q_experiment(&p, &zeros, exponent, grid, &cfg.q).map_err(numerical)?;
            write_json(common.output.as_deref(), &x.report)?;
            if let Some(path) = qhat {
                let half = grid / 2;
                let rows = (0..half)
                    .flat_map(|k| (0..half).map(move |l| (k, l)))
                    .map(|(k, l)| vec![k.to_string(), l.to_string(), g12(x.coefficient(k, l).norm())]);
                write_csv(Some(&path), &["k", "l", "modulus"], rows)?;
            }
            Ok(0)
        }
    }
}

fn classify_config(o: &Overrides, family: Option<BasisFamily>) -> ClassifyConfig {
    ClassifyConfig {
        torus: o.torus,
        bidisk: o.bidisk,
        decay: o.decay,
        family,
    }
}

fn parse_zero(text: &str) -> Result<(Complex64, Complex64), CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Parse(format!("zero '{text}' must be written z1,z2")))?;
    Ok((parse_constant(a)?, parse_constant(b)?))
}

fn detected_zeros(p: &Poly2, cfg: &Overrides) -> Result<Vec<(Complex64, Complex64)>, CliError> {
    match torus_zeros(p, &cfg.torus) {
        Ok(TorusZeroClass::Infinite(w)) => Err(CliError::Numerical(format!(
            "p has infinitely many torus zeros ({w:?}); the quotient is not defined"
        ))),
        Ok(t) => Ok(t.points().to_vec()),
        Err(ZeroSetError::Constant) => Ok(Vec::new()),
        Err(e) => Err(numerical(e)),
    }
}

//! Zeros of a bivariate polynomial: the torus trichotomy (empty, finite,
//! infinite) decided algebraically, and a heuristic search of the open bidisk.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::operators::reflect;
use crate::poly::roots::canonical_arg;
use crate::poly::{
    all_roots, resultant_z2, roots_on_unit_circle, Poly2, PolyError, ResultantStatus, RootConfig, Variable,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZeroSetError {
    #[error("a constant polynomial has no torus zero set to classify")]
    Constant,
    #[error("torus classification inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TorusConfig {
    /// Allowed `| |z| - 1 |` for a point to count as unimodular.
    pub circle_tol: f64,
    /// Reported points satisfy `|p| <= resid_tol * coeff_norm(p)`.
    pub resid_tol: f64,
    /// Relative tolerance of the reflection proportionality test.
    pub proportional_tol: f64,
    /// Relative threshold for an identically vanishing resultant.
    pub resultant_zero_tol: f64,
    /// Roots within this distance of the unit circle seed a torus refinement.
    pub candidate_tol: f64,
    /// Refined points closer than this in both coordinates are one zero.
    pub merge_tol: f64,
    pub roots: RootConfig,
}

impl Default for TorusConfig {
    fn default() -> Self {
        TorusConfig {
            circle_tol: 1e-6,
            resid_tol: 1e-8,
            proportional_tol: 1e-10,
            resultant_zero_tol: crate::poly::resultant::ZERO_THRESHOLD,
            candidate_tol: 1e-2,
            merge_tol: 1e-6,
            roots: RootConfig::default(),
        }
    }
}

/// Why the torus zero set is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum TorusWitness {
    /// `reflect(p) = lambda * p`.
    ProportionalReflection { lambda: Complex64 },
    /// `p` and `reflect(p)` share a factor depending on `z2`.
    VanishingResultant,
    /// `p` depends on one variable only and has a unimodular root there,
    /// so `{root} x T` (or `T x {root}`) lies in the zero set.
    UnivariateCircleRoot { variable: Variable, root: Complex64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "TorusRepr", try_from = "TorusRepr")]
pub enum TorusZeroClass {
    Empty,
    Finite(Vec<(Complex64, Complex64)>),
    Infinite(TorusWitness),
}

impl TorusZeroClass {
    pub fn tag(&self) -> &'static str {
        match self {
            TorusZeroClass::Empty => "empty",
            TorusZeroClass::Finite(_) => "finite",
            TorusZeroClass::Infinite(_) => "infinite",
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, TorusZeroClass::Empty)
    }

    /// Empty or finite.
    pub fn is_at_most_finite(&self) -> bool {
        !matches!(self, TorusZeroClass::Infinite(_))
    }

    pub fn points(&self) -> &[(Complex64, Complex64)] {
        match self {
            TorusZeroClass::Finite(pts) => pts,
            _ => &[],
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "torus", rename_all = "snake_case")]
enum TorusRepr {
    Empty,
    Finite {
        points: Vec<[f64; 4]>,
    },
    Infinite {
        #[serde(flatten)]
        witness: TorusWitness,
    },
}

impl From<TorusZeroClass> for TorusRepr {
    fn from(c: TorusZeroClass) -> Self {
        match c {
            TorusZeroClass::Empty => TorusRepr::Empty,
            TorusZeroClass::Finite(pts) => TorusRepr::Finite {
                points: pts.iter().map(|(a, b)| [a.re, a.im, b.re, b.im]).collect(),
            },
            TorusZeroClass::Infinite(witness) => TorusRepr::Infinite { witness },
        }
    }
}

impl TryFrom<TorusRepr> for TorusZeroClass {
    type Error = String;

    fn try_from(r: TorusRepr) -> Result<Self, String> {
        Ok(match r {
            TorusRepr::Empty => TorusZeroClass::Empty,
            TorusRepr::Finite { points } => TorusZeroClass::Finite(
                points
                    .into_iter()
                    .map(|[a, b, c, d]| (Complex64::new(a, b), Complex64::new(c, d)))
                    .collect(),
            ),
            TorusRepr::Infinite { witness } => TorusZeroClass::Infinite(witness),
        })
    }
}

/// Divides out the largest monomial `z1^a z2^b`; monomials never vanish on the torus.
fn strip_monomial(p: &Poly2) -> Poly2 {
    let a = p.terms().map(|t| t.0).min().unwrap_or(0);
    let b = p.terms().map(|t| t.1).min().unwrap_or(0);
    if a == 0 && b == 0 {
        return p.clone();
    }
    Poly2::from_terms(p.terms().map(|(k, l, c)| (k - a, l - b, c))).expect("finite")
}

/// Classifies `Z(p) ∩ T^2`.
///
/// One-variable inputs are decided by their roots. Otherwise `p` is compared
/// with its reflection: proportionality or a vanishing resultant
/// `Res_z2(p, reflect(p))` means a common factor and infinitely many torus
/// zeros; else every torus zero `(rho, sigma)` has `rho` among the unimodular
/// roots of the resultant and `sigma` among the unimodular roots of `p(rho, .)`.
/// Each such pair is polished on the torus and kept when
/// `|p| <= resid_tol * coeff_norm(p)`.
pub fn torus_zeros(p: &Poly2, cfg: &TorusConfig) -> Result<TorusZeroClass, ZeroSetError> {
    let q = strip_monomial(p);
    if q.bidegree() == (0, 0) {
        if p.bidegree() == (0, 0) {
            return Err(ZeroSetError::Constant);
        }
        return Ok(TorusZeroClass::Empty);
    }

    for (free, var) in [(Variable::Z2, Variable::Z1), (Variable::Z1, Variable::Z2)] {
        if !q.depends_on(free) {
            let u = q.restrict(free, Complex64::new(0.0, 0.0));
            let roots = roots_on_unit_circle(&u, cfg.circle_tol, &cfg.roots)?;
            return Ok(match roots.first() {
                Some(&root) => TorusZeroClass::Infinite(TorusWitness::UnivariateCircleRoot { variable: var, root }),
                None => TorusZeroClass::Empty,
            });
        }
    }

    let qt = reflect(&q).expect("nonzero");
    if let Some(lambda) = q.proportional(&qt, cfg.proportional_tol) {
        return Ok(TorusZeroClass::Infinite(TorusWitness::ProportionalReflection {
            lambda,
        }));
    }

    let res = resultant_z2(&q, &qt)?;
    match res.status(cfg.resultant_zero_tol) {
        ResultantStatus::Zero => return Ok(TorusZeroClass::Infinite(TorusWitness::VanishingResultant)),
        ResultantStatus::Borderline => {
            return Err(ZeroSetError::Inconclusive(format!(
                "resultant max coefficient {:e} is within a factor 10 of the zero threshold {:e}",
                res.max_coeff(),
                cfg.resultant_zero_tol * res.scale
            )))
        }
        ResultantStatus::NonZero => {}
    }

    // Roots of a resultant with several multiple roots can sit well off the
    // circle numerically, so near-circle roots only seed a refinement on the
    // torus itself; the residual bound decides.
    let near = |z: &Complex64| (z.norm() - 1.0).abs() <= cfg.candidate_tol;
    let rhos: Vec<Complex64> = all_roots(&res.trimmed(), &cfg.roots)?
        .into_iter()
        .filter(near)
        .collect();
    let bound = cfg.resid_tol * q.coeff_norm();
    let per_rho = exec::map_slice(&rhos, |&rho| -> Result<Vec<(Complex64, Complex64)>, ZeroSetError> {
        let s = q.restrict(Variable::Z1, rho);
        if s.max_abs_coeff() <= bound {
            return Err(ZeroSetError::Inconclusive(format!(
                "p vanishes on the whole circle z1 = {rho} but the resultant does not"
            )));
        }
        if s.degree() == 0 {
            return Ok(Vec::new());
        }
        Ok(all_roots(&s, &cfg.roots)?
            .into_iter()
            .filter(near)
            .map(|sigma| refine_on_torus(&q, rho.arg(), sigma.arg()))
            .filter(|&(z1, z2)| q.evaluate(z1, z2).norm() <= bound)
            .collect())
    });
    let mut points: Vec<(Complex64, Complex64)> = Vec::new();
    for r in per_rho {
        for z in r? {
            let dup = points
                .iter()
                .any(|w| (w.0 - z.0).norm() <= cfg.merge_tol && (w.1 - z.1).norm() <= cfg.merge_tol);
            if !dup {
                points.push(z);
            }
        }
    }
    if points.is_empty() {
        return Ok(TorusZeroClass::Empty);
    }
    points.sort_by(|a, b| {
        canonical_arg(a.0)
            .total_cmp(&canonical_arg(b.0))
            .then(canonical_arg(a.1).total_cmp(&canonical_arg(b.1)))
    });
    Ok(TorusZeroClass::Finite(points))
}

/// Double-double evaluation. Near a degenerate zero `|p|` grows only
/// quadratically, so plain rounding noise would limit positions to about
/// `sqrt(eps)`.
mod dd {
    use num_complex::Complex64;

    use crate::Poly2;

    #[derive(Clone, Copy)]
    struct Dd(f64, f64);

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd(s, (a - (s - bb)) + (b - bb))
    }

    fn quick(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd(s, b - (s - a))
    }

    impl Dd {
        fn add(self, o: Dd) -> Dd {
            let s = two_sum(self.0, o.0);
            quick(s.0, s.1 + self.1 + o.1)
        }

        fn scale(self, b: f64) -> Dd {
            let p = self.0 * b;
            let e = self.0.mul_add(b, -p);
            quick(p, e + self.1 * b)
        }

        fn neg(self) -> Dd {
            Dd(-self.0, -self.1)
        }
    }

    #[derive(Clone, Copy)]
    struct Cdd(Dd, Dd);

    impl Cdd {
        const ZERO: Cdd = Cdd(Dd(0.0, 0.0), Dd(0.0, 0.0));

        fn mul(self, z: Complex64) -> Cdd {
            Cdd(
                self.0.scale(z.re).add(self.1.scale(z.im).neg()),
                self.0.scale(z.im).add(self.1.scale(z.re)),
            )
        }

        fn add(self, o: Cdd) -> Cdd {
            Cdd(self.0.add(o.0), self.1.add(o.1))
        }

        fn add_c(self, c: Complex64) -> Cdd {
            self.add(Cdd(Dd(c.re, 0.0), Dd(c.im, 0.0)))
        }
    }

    pub(super) fn evaluate(p: &Poly2, z1: Complex64, z2: Complex64) -> Complex64 {
        let (m, n) = p.bidegree();
        let mut acc = Cdd::ZERO;
        for k in (0..=m).rev() {
            let mut row = Cdd::ZERO;
            for l in (0..=n).rev() {
                row = row.mul(z2).add_c(p.coeff(k, l));
            }
            acc = acc.mul(z1).add(row);
        }
        Complex64::new(acc.0 .0 + acc.0 .1, acc.1 .0 + acc.1 .1)
    }
}

/// Levenberg–Marquardt on `(theta, phi) -> p(e^{i theta}, e^{i phi})` as two
/// real equations. Torus zeros are typically degenerate (the Jacobian drops
/// rank), so iteration continues until the residual stops improving.
fn refine_on_torus(p: &Poly2, theta: f64, phi: f64) -> (Complex64, Complex64) {
    let point = |t: f64, f: f64| (Complex64::from_polar(1.0, t), Complex64::from_polar(1.0, f));
    let (mut t, mut f) = (theta, phi);
    let (z1, z2) = point(t, f);
    let mut value = dd::evaluate(p, z1, z2);
    let mut mu = 1e-3;
    for _ in 0..200 {
        if value.norm() == 0.0 {
            break;
        }
        let (z1, z2) = point(t, f);
        let (_, d1, d2) = partials(p, z1, z2);
        let a = Complex64::i() * z1 * d1;
        let b = Complex64::i() * z2 * d2;
        // Normal equations (J^T J + mu I) step = -J^T r for J = [[Re a, Re b], [Im a, Im b]].
        let jtj = [a.norm_sqr(), a.re * b.re + a.im * b.im, b.norm_sqr()];
        let jtr = [a.re * value.re + a.im * value.im, b.re * value.re + b.im * value.im];
        let mut accepted = false;
        while mu < 1e12 {
            let damp = mu * jtj[0].max(jtj[2]).max(1e-300);
            let m00 = jtj[0] + damp;
            let m11 = jtj[2] + damp;
            let det = m00 * m11 - jtj[1] * jtj[1];
            let dt = -(m11 * jtr[0] - jtj[1] * jtr[1]) / det;
            let df = -(m00 * jtr[1] - jtj[1] * jtr[0]) / det;
            let (w1, w2) = point(t + dt, f + df);
            let v = dd::evaluate(p, w1, w2);
            if v.norm() < value.norm() {
                t += dt;
                f += df;
                value = v;
                mu = (mu * 0.3).max(1e-12);
                accepted = true;
                break;
            }
            mu *= 10.0;
        }
        if !accepted {
            break;
        }
    }
    // At a tangential zero J is rank one and |p| is quadratic along its null
    // direction, where the step above stalls. Minimise along that line directly.
    for _ in 0..4 {
        let (z1, z2) = point(t, f);
        let (_, d1, d2) = partials(p, z1, z2);
        let a = Complex64::i() * z1 * d1;
        let b = Complex64::i() * z2 * d2;
        // Null direction of J: orthogonal to the dominant row direction.
        let (u, v) = if a.norm_sqr() >= b.norm_sqr() {
            (-b.re * a.re - b.im * a.im, a.norm_sqr())
        } else {
            (b.norm_sqr(), -a.re * b.re - a.im * b.im)
        };
        let len = u.hypot(v);
        if len == 0.0 || !len.is_finite() {
            break;
        }
        let (u, v) = (u / len, v / len);
        let at = |s: f64| {
            let (w1, w2) = point(t + s * u, f + s * v);
            dd::evaluate(p, w1, w2).norm()
        };
        let s = line_minimum(at, 1e-3);
        let best = at(s);
        if best >= value.norm() {
            break;
        }
        t += s * u;
        f += s * v;
        value = dd::evaluate(p, point(t, f).0, point(t, f).1);
    }
    point(t, f)
}

/// Minimiser of `g` on `[-h, h]`: a coarse scan, then golden-section search in
/// the best cell.
fn line_minimum(g: impl Fn(f64) -> f64, h: f64) -> f64 {
    let cells = 40;
    let step = 2.0 * h / cells as f64;
    let best = (0..=cells)
        .map(|i| -h + step * i as f64)
        .min_by(|x, y| g(*x).total_cmp(&g(*y)))
        .unwrap_or(0.0);
    let (mut lo, mut hi) = (best - step, best + step);
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    for _ in 0..100 {
        if g1 <= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - r * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + r * (hi - lo);
            g2 = g(x2);
        }
    }
    0.5 * (lo + hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BidiskConfig {
    /// Search radius is `1 - delta` in each variable.
    pub delta: f64,
    /// Fine grid resolution per variable.
    pub radii: usize,
    pub angles: usize,
    /// Coarse grid resolution per variable.
    pub coarse_radii: usize,
    pub coarse_angles: usize,
    /// Coarse minima refined on the fine grid and then by Newton.
    pub candidates: usize,
    pub newton_iterations: usize,
    /// A zero is certified when `|p| <= resid_tol * coeff_norm(p)`.
    pub resid_tol: f64,
}

impl Default for BidiskConfig {
    fn default() -> Self {
        BidiskConfig {
            delta: 1e-3,
            radii: 64,
            angles: 256,
            coarse_radii: 16,
            coarse_angles: 64,
            candidates: 6,
            newton_iterations: 60,
            resid_tol: 1e-8,
        }
    }
}

/// Resolution the heuristic verdict was reached at.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub delta: f64,
    pub radii: usize,
    pub angles: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "bidisk", rename_all = "snake_case")]
pub enum BidiskZeroReport {
    ZeroFound {
        point: (Complex64, Complex64),
        modulus: f64,
    },
    NoneFoundHeuristic {
        min_modulus: f64,
        argmin: (Complex64, Complex64),
        grid: GridSpec,
    },
}

impl BidiskZeroReport {
    pub fn zero_found(&self) -> bool {
        matches!(self, BidiskZeroReport::ZeroFound { .. })
    }
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    z: (Complex64, Complex64),
    modulus: f64,
}

fn polar(radius: f64, steps: usize, i: usize, angles: usize, j: usize) -> Complex64 {
    let r = if steps <= 1 {
        radius
    } else {
        radius * i as f64 / (steps - 1) as f64
    };
    Complex64::from_polar(r, 2.0 * PI * j as f64 / angles as f64)
}

/// Best `z2` on the polar grid for each fixed `z1`.
fn best_over_z2(p: &Poly2, z1: Complex64, z2s: &[Complex64]) -> Sample {
    let s = p.restrict(Variable::Z1, z1);
    z2s.iter()
        .map(|&z2| Sample {
            z: (z1, z2),
            modulus: s.evaluate(z2).norm(),
        })
        .min_by(|a, b| a.modulus.total_cmp(&b.modulus))
        .expect("nonempty grid")
}

fn clamp_disk(z: Complex64, radius: f64) -> Complex64 {
    let r = z.norm();
    if r > radius {
        z * (radius / r)
    } else {
        z
    }
}

fn partials(p: &Poly2, z1: Complex64, z2: Complex64) -> (Complex64, Complex64, Complex64) {
    let mut d1 = Complex64::new(0.0, 0.0);
    let mut d2 = Complex64::new(0.0, 0.0);
    for (k, l, c) in p.terms() {
        if k > 0 {
            d1 += c * k as f64 * z1.powu(k as u32 - 1) * z2.powu(l as u32);
        }
        if l > 0 {
            d2 += c * l as f64 * z1.powu(k as u32) * z2.powu(l as u32 - 1);
        }
    }
    (p.evaluate(z1, z2), d1, d2)
}

/// Damped minimum-norm Newton steps on `p = 0`, kept inside the closed
/// polydisk of the given radius.
fn newton_refine(p: &Poly2, start: Sample, radius: f64, iterations: usize, stop: f64) -> Sample {
    let mut best = start;
    for _ in 0..iterations {
        if best.modulus <= stop {
            break;
        }
        let (v, d1, d2) = partials(p, best.z.0, best.z.1);
        let g = d1.norm_sqr() + d2.norm_sqr();
        if g == 0.0 {
            break;
        }
        let dz1 = -v * d1.conj() / g;
        let dz2 = -v * d2.conj() / g;
        let mut t = 1.0;
        let mut improved = false;
        for _ in 0..30 {
            let z1 = clamp_disk(best.z.0 + dz1 * t, radius);
            let z2 = clamp_disk(best.z.1 + dz2 * t, radius);
            let m = p.evaluate(z1, z2).norm();
            if m < best.modulus {
                best = Sample {
                    z: (z1, z2),
                    modulus: m,
                };
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if !improved {
            break;
        }
    }
    best
}

/// Heuristic search for zeros of `p` in `{|z1|, |z2| <= 1 - delta}`.
///
/// A coarse polar product grid picks the most promising `z1` samples, a fine
/// local grid around each sharpens them, and damped Newton polishes the
/// result. Only a residual-certified zero is reported as found.
pub fn bidisk_zero_search(p: &Poly2, cfg: &BidiskConfig) -> BidiskZeroReport {
    let radius = 1.0 - cfg.delta;
    let grid = GridSpec {
        delta: cfg.delta,
        radii: cfg.radii,
        angles: cfg.angles,
    };
    let stop = cfg.resid_tol * p.coeff_norm();

    let coarse_z2: Vec<Complex64> = (0..cfg.coarse_radii)
        .flat_map(|i| (0..cfg.coarse_angles).map(move |j| (i, j)))
        .map(|(i, j)| polar(radius, cfg.coarse_radii, i, cfg.coarse_angles, j))
        .collect();
    let mut coarse = exec::map_slice(&coarse_z2, |&z1| best_over_z2(p, z1, &coarse_z2));
    coarse.sort_by(|a, b| a.modulus.total_cmp(&b.modulus));
    coarse.truncate(cfg.candidates.max(1));

    // Fine window: two coarse cells either side of each candidate, at fine resolution.
    let dr = radius / (cfg.radii.max(2) - 1) as f64;
    let dtheta = 2.0 * PI / cfg.angles.max(1) as f64;
    let half_r = (2 * cfg.radii / cfg.coarse_radii.max(1)).max(1) as i64;
    let half_t = (2 * cfg.angles / cfg.coarse_angles.max(1)).max(1) as i64;
    let window = |z: Complex64| -> Vec<Complex64> {
        let (r0, t0) = (z.norm(), z.arg());
        let mut out = Vec::new();
        for i in -half_r..=half_r {
            let r = r0 + i as f64 * dr;
            if !(0.0..=radius + 1e-15).contains(&r) {
                continue;
            }
            for j in -half_t..=half_t {
                out.push(Complex64::from_polar(r.min(radius), t0 + j as f64 * dtheta));
            }
        }
        out
    };

    let refined = exec::map_slice(&coarse, |c| {
        let z1s = window(c.z.0);
        let z2s = window(c.z.1);
        let fine =
            z1s.iter()
                .map(|&z1| best_over_z2(p, z1, &z2s))
                .fold(*c, |best, s| if s.modulus < best.modulus { s } else { best });
        newton_refine(p, fine, radius, cfg.newton_iterations, 0.01 * stop)
    });
    let best = refined
        .into_iter()
        .min_by(|a, b| a.modulus.total_cmp(&b.modulus))
        .expect("at least one candidate");

    if best.modulus <= stop {
        BidiskZeroReport::ZeroFound {
            point: best.z,
            modulus: best.modulus,
        }
    } else {
        BidiskZeroReport::NoneFoundHeuristic {
            min_modulus: best.modulus,
            argmin: best.z,
            grid,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_expression;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(s: &str) -> Poly2 {
        parse_expression(s).unwrap()
    }

    fn classify(s: &str) -> TorusZeroClass {
        torus_zeros(&poly(s), &TorusConfig::default()).unwrap()
    }

    #[test]
    fn torus_examples() {
        let pts = classify("2 - z1 - z2");
        assert_eq!(pts.tag(), "finite");
        assert_eq!(pts.points().len(), 1);
        let (a, b) = pts.points()[0];
        assert!((a - c(1.0, 0.0)).norm() < 1e-6 && (b - c(1.0, 0.0)).norm() < 1e-6);

        match classify("1 - z1*z2") {
            TorusZeroClass::Infinite(TorusWitness::ProportionalReflection { lambda }) => {
                assert!((lambda - c(-1.0, 0.0)).norm() < 1e-12)
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(classify("z1 - 2"), TorusZeroClass::Empty);
        match classify("z1 - 1") {
            TorusZeroClass::Infinite(TorusWitness::UnivariateCircleRoot { variable, root }) => {
                assert_eq!(variable, Variable::Z1);
                assert!((root - c(1.0, 0.0)).norm() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            torus_zeros(&Poly2::one(), &TorusConfig::default()),
            Err(ZeroSetError::Constant)
        ));
    }

    #[test]
    fn monomial_factors_and_common_factors() {
        assert_eq!(classify("z2*(z1 - 3)"), TorusZeroClass::Empty);
        assert_eq!(classify("z1*z2"), TorusZeroClass::Empty);
        assert_eq!(classify("z2*(z1 - 1)").tag(), "infinite");
        assert_eq!(
            classify("(1 - z1*z2)*(3 - z1 - z2)"),
            TorusZeroClass::Infinite(TorusWitness::VanishingResultant)
        );
        assert_eq!(classify("3 - z1 - z2"), TorusZeroClass::Empty);
        assert_eq!(classify("z1 + z2").tag(), "infinite");
    }

    #[test]
    fn two_torus_zeros() {
        // (2 - z1 - z2)(2 + z1 + z2) vanishes at (1, 1) and (-1, -1).
        let t = classify("(2 - z1 - z2)*(2 + z1 + z2)");
        let pts = t.points();
        assert_eq!(pts.len(), 2, "{t:?}");
        assert!((pts[0].0 - c(1.0, 0.0)).norm() < 1e-6);
        assert!((pts[1].1 - c(-1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn json_shapes() {
        let v = serde_json::to_value(classify("1 - z1*z2")).unwrap();
        assert_eq!(v["torus"], "infinite");
        assert_eq!(v["witness"], "proportional_reflection");
        assert_eq!(v["lambda"][0], -1.0);
        let v = serde_json::to_value(TorusZeroClass::Finite(vec![(c(1.0, 0.0), c(0.0, 1.0))])).unwrap();
        assert_eq!(v.to_string(), r#"{"points":[[1.0,0.0,0.0,1.0]],"torus":"finite"}"#);
        for t in [
            TorusZeroClass::Empty,
            classify("2 - z1 - z2"),
            classify("z1 - 1"),
            TorusZeroClass::Infinite(TorusWitness::VanishingResultant),
        ] {
            let s = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<TorusZeroClass>(&s).unwrap(), t);
        }
    }

    #[test]
    fn bidisk_examples() {
        let cfg = BidiskConfig::default();
        match bidisk_zero_search(&poly("z1 - 0.5"), &cfg) {
            BidiskZeroReport::ZeroFound { point, modulus } => {
                assert!((point.0 - c(0.5, 0.0)).norm() < 1e-8);
                assert!(modulus <= 1e-8);
            }
            other => panic!("{other:?}"),
        }
        match bidisk_zero_search(&poly("2 - z1 - z2"), &cfg) {
            BidiskZeroReport::NoneFoundHeuristic {
                min_modulus, argmin, ..
            } => {
                assert!((min_modulus - 2e-3).abs() < 1e-6, "{min_modulus}");
                assert!((argmin.0 - c(0.999, 0.0)).norm() < 1e-3);
            }
            other => panic!("{other:?}"),
        }
        match bidisk_zero_search(&Poly2::one(), &cfg) {
            BidiskZeroReport::NoneFoundHeuristic { min_modulus, .. } => assert_eq!(min_modulus, 1.0),
            other => panic!("{other:?}"),
        }
        assert!(bidisk_zero_search(&poly("z1*z2 - 0.25 - 0.1*i"), &cfg).zero_found());
        assert!(bidisk_zero_search(&poly("z1 + z2 - 1.5"), &cfg).zero_found());
        assert!(!bidisk_zero_search(&poly("1 - z1*z2"), &cfg).zero_found());
    }
}

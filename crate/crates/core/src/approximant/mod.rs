//! Optimal polynomial approximants and the distance sequence
//! `d_n = dist(1, f * P_n)` in a weighted space.
//!
//! The normal equations `G c = v` use `G_ij = <e_j f, e_i f>` and
//! `v_i = <1, e_i f>` over a monomial basis `e_i`. Bases are listed in
//! graded-lexicographic order (by `k + l`, then `k`), so the `TotalDegree(n)`
//! and `DiagonalOnly(n)` bases are prefixes of their successors and a single
//! Cholesky factorization serves a whole distance sequence.

mod certificate;
mod closed_form;
mod decay;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::linalg::Cholesky;
use crate::poly::{Poly2, ONE, ZERO};
use crate::spaces::{norm_squared_unchecked, SpaceError, SpaceKind, SpaceSpec};

pub use certificate::{evaluation_bound_certificate, zeta};
pub use closed_form::{closed_form_distance, ClosedFormFamily};
pub use decay::{decay_diagnostic, DecayConfig, DecayLabel, DecayVerdict, ModelFit};

/// Relative pivot tolerance (times the trace) below which Cholesky fails.
pub const PIVOT_TOL: f64 = 1e-12;
/// Reciprocal condition estimate below which the QR route is used.
pub const QR_SWITCH_RATIO: f64 = 1e-12;
/// Allowed gap between `1 - Re v^H c` and the explicit residual norm.
pub const SELF_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ApproxError {
    #[error("the zero polynomial has no nontrivial multiples")]
    ZeroPolynomial,
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("Gram matrix is not positive definite: pivot {pivot:e} at index {index} (tolerance {tolerance:e})")]
    NotPositiveDefinite { index: usize, pivot: f64, tolerance: f64 },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum BasisSpec {
    /// All `z1^k z2^l` with `k + l <= n`.
    TotalDegree { n: usize },
    /// All `z1^k z2^l` with `k <= n1`, `l <= n2`.
    BiDegree { n1: usize, n2: usize },
    /// `(z1 z2)^m` for `m <= n`.
    DiagonalOnly { n: usize },
}

impl BasisSpec {
    pub fn total_degree(n: usize) -> Self {
        BasisSpec::TotalDegree { n }
    }

    pub fn bidegree(n1: usize, n2: usize) -> Self {
        BasisSpec::BiDegree { n1, n2 }
    }

    pub fn diagonal(n: usize) -> Self {
        BasisSpec::DiagonalOnly { n }
    }

    pub fn len(&self) -> usize {
        match *self {
            BasisSpec::TotalDegree { n } => (n + 1) * (n + 2) / 2,
            BasisSpec::BiDegree { n1, n2 } => (n1 + 1) * (n2 + 1),
            BasisSpec::DiagonalOnly { n } => n + 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Nested basis families usable for distance sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisFamily {
    TotalDegree,
    DiagonalOnly,
}

impl BasisFamily {
    pub fn at(&self, n: usize) -> BasisSpec {
        match self {
            BasisFamily::TotalDegree => BasisSpec::total_degree(n),
            BasisFamily::DiagonalOnly => BasisSpec::diagonal(n),
        }
    }
}

/// Basis monomials `(k, l)` in graded-lexicographic order.
pub fn basis_monomials(spec: BasisSpec) -> Vec<(usize, usize)> {
    match spec {
        BasisSpec::TotalDegree { n } => (0..=n).flat_map(|s| (0..=s).map(move |k| (k, s - k))).collect(),
        BasisSpec::BiDegree { n1, n2 } => (0..=n1 + n2)
            .flat_map(|s| (0..=s).map(move |k| (k, s - k)))
            .filter(|&(k, l)| k <= n1 && l <= n2)
            .collect(),
        BasisSpec::DiagonalOnly { n } => (0..=n).map(|m| (m, m)).collect(),
    }
}

/// Normal equations for the best approximation of `1` from `f * span(basis)`.
#[derive(Debug, Clone)]
pub struct GramSystem {
    pub basis: Vec<(usize, usize)>,
    /// Row-major, `gram[i * dim + j] = <e_j f, e_i f>`.
    pub gram: Vec<Complex64>,
    /// `rhs[i] = <1, e_i f>`.
    pub rhs: Vec<Complex64>,
    pub f: Poly2,
    pub space: SpaceSpec,
    pub spec: BasisSpec,
}

impl GramSystem {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.gram[i * self.dim() + j]
    }

    /// Largest `|G_ij - conj(G_ji)|` relative to the largest diagonal entry.
    pub fn hermitian_defect(&self) -> f64 {
        let n = self.dim();
        let scale = (0..n).map(|i| self.entry(i, i).norm()).fold(0.0, f64::max);
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..=i {
                worst = worst.max((self.entry(i, j) - self.entry(j, i).conj()).norm());
            }
        }
        worst / scale
    }

    fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.entry(i, i).re).sum()
    }
}

/// Dense lookup from monomial to basis position.
struct BasisIndex {
    cols: usize,
    slots: Vec<Option<usize>>,
}

impl BasisIndex {
    fn new(basis: &[(usize, usize)]) -> Self {
        let rows = basis.iter().map(|b| b.0).max().unwrap_or(0) + 1;
        let cols = basis.iter().map(|b| b.1).max().unwrap_or(0) + 1;
        let mut slots = vec![None; rows * cols];
        for (i, &(k, l)) in basis.iter().enumerate() {
            slots[k * cols + l] = Some(i);
        }
        BasisIndex { cols, slots }
    }

    fn get(&self, k: isize, l: isize) -> Option<usize> {
        if k < 0 || l < 0 || l as usize >= self.cols {
            return None;
        }
        self.slots.get(k as usize * self.cols + l as usize).copied().flatten()
    }
}

fn check_space(f: &Poly2, space: &SpaceSpec) -> Result<(), ApproxError> {
    if space.kind == SpaceKind::Uni && f.depends_on(crate::poly::Variable::Z2) {
        let (k, l, _) = f.terms().find(|t| t.1 > 0).unwrap();
        return Err(SpaceError::UnivariateIndex { k, l }.into());
    }
    Ok(())
}

pub fn assemble_gram(f: &Poly2, spec: BasisSpec, space: &SpaceSpec) -> Result<GramSystem, ApproxError> {
    if f.is_zero() {
        return Err(ApproxError::ZeroPolynomial);
    }
    check_space(f, space)?;
    if space.kind == SpaceKind::Uni && basis_monomials(spec).iter().any(|b| b.1 > 0) {
        return Err(ApproxError::Precondition(
            "univariate space needs a z2-free basis (use BiDegree { n1, n2: 0 })".into(),
        ));
    }
    let basis = basis_monomials(spec);
    let dim = basis.len();
    let index = BasisIndex::new(&basis);
    let support: Vec<(usize, usize, Complex64)> = f.terms().collect();

    let mut gram = vec![ZERO; dim * dim];
    exec::for_each_row_mut(&mut gram, dim, |i, row| {
        let (ki, li) = basis[i];
        // <e_j f, e_i f> = sum over positions P = e_i + t = e_j + s.
        for &(tk, tl, ft) in &support {
            let (pk, pl) = (ki + tk, li + tl);
            let w = space.weight_unchecked(pk, pl);
            let wt = ft.conj() * w;
            for &(sk, sl, fs) in &support {
                if let Some(j) = index.get(pk as isize - sk as isize, pl as isize - sl as isize) {
                    row[j] += fs * wt;
                }
            }
        }
    });

    let f00 = f.coeff(0, 0);
    let rhs = basis
        .iter()
        .map(|&b| if b == (0, 0) { f00.conj() } else { ZERO })
        .collect();

    Ok(GramSystem {
        basis,
        gram,
        rhs,
        f: f.clone(),
        space: *space,
        spec,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    Cholesky,
    Qr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproximantResult {
    /// Optimal approximant on the basis.
    pub p: Poly2,
    /// `||p f - 1||^2`, from the explicit residual.
    pub distance_sq: f64,
    /// `1 - Re(v^H c)`, the normal-equation value.
    pub distance_sq_normal: f64,
    /// `p f - 1`.
    pub residual: Poly2,
    pub basis_spec: BasisSpec,
    pub basis_size: usize,
    pub solver: SolverKind,
    /// Squared ratio of extreme Cholesky pivots (reciprocal condition estimate).
    pub pivot_ratio: f64,
}

impl ApproximantResult {
    pub fn distance(&self) -> f64 {
        self.distance_sq.sqrt()
    }

    /// Largest `|<residual, e_i f>|` over the basis, relative to
    /// `||residual|| * max_i ||e_i f||`.
    pub fn orthogonality_defect(&self, f: &Poly2, space: &SpaceSpec) -> f64 {
        let basis = basis_monomials(self.basis_spec);
        let r_norm = norm_squared_unchecked(&self.residual, space).sqrt();
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for (k, l) in basis {
            let ef = &Poly2::monomial(k, l, ONE) * f;
            scale = scale.max(norm_squared_unchecked(&ef, space).sqrt());
            let ip = crate::spaces::inner_product(&self.residual, &ef, space).unwrap_or(ZERO);
            worst = worst.max(ip.norm());
        }
        if r_norm == 0.0 || scale == 0.0 {
            return worst;
        }
        worst / (r_norm * scale)
    }
}

/// Options for [`solve_with`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveOptions {
    /// Skip Cholesky and solve the weighted least-squares problem by QR.
    pub force_qr: bool,
}

pub fn solve_normal_equations(sys: &GramSystem) -> Result<ApproximantResult, ApproxError> {
    solve_with(sys, SolveOptions::default())
}

pub fn solve_with(sys: &GramSystem, opts: SolveOptions) -> Result<ApproximantResult, ApproxError> {
    let dim = sys.dim();
    let chol = factor(sys)?;
    let ratio = chol.pivot_ratio(dim);
    if opts.force_qr || ratio < QR_SWITCH_RATIO {
        let coeffs = solve_qr(&sys.f, &sys.basis, &sys.space)?;
        return finish(sys, &sys.basis, coeffs, SolverKind::Qr, ratio);
    }
    let coeffs = chol.backward(&chol.forward(&sys.rhs));
    finish(sys, &sys.basis, coeffs, SolverKind::Cholesky, ratio)
}

fn factor(sys: &GramSystem) -> Result<Cholesky, ApproxError> {
    let tolerance = PIVOT_TOL * sys.trace();
    Cholesky::factor(&sys.gram, sys.dim(), tolerance).map_err(|e| ApproxError::NotPositiveDefinite {
        index: e.index,
        pivot: e.pivot,
        tolerance,
    })
}

fn finish(
    sys: &GramSystem,
    basis: &[(usize, usize)],
    coeffs: Vec<Complex64>,
    solver: SolverKind,
    pivot_ratio: f64,
) -> Result<ApproximantResult, ApproxError> {
    let vhc: Complex64 = sys.rhs[..basis.len()]
        .iter()
        .zip(&coeffs)
        .map(|(v, c)| v.conj() * c)
        .sum();
    let distance_sq_normal = 1.0 - vhc.re;
    let p = Poly2::from_terms(basis.iter().zip(&coeffs).map(|(&(k, l), &c)| (k, l, c)))
        .map_err(|e| ApproxError::Numerical(format!("approximant coefficients: {e}")))?;
    let residual = &(&p * &sys.f) - &Poly2::one();
    let distance_sq = norm_squared_unchecked(&residual, &sys.space);
    if (distance_sq - distance_sq_normal).abs() > SELF_CHECK_TOL || !distance_sq.is_finite() {
        return Err(ApproxError::Numerical(format!(
            "residual norm {distance_sq:e} disagrees with normal equations {distance_sq_normal:e} \
             for basis {:?}",
            sys.spec
        )));
    }
    let basis_spec = match sys.spec {
        BasisSpec::TotalDegree { .. } => BasisSpec::total_degree(basis.last().map_or(0, |b| b.0 + b.1)),
        BasisSpec::DiagonalOnly { .. } => BasisSpec::diagonal(basis.last().map_or(0, |b| b.0)),
        spec => spec,
    };
    Ok(ApproximantResult {
        p,
        distance_sq,
        distance_sq_normal,
        residual,
        basis_spec,
        basis_size: basis.len(),
        solver,
        pivot_ratio,
    })
}

/// Least squares `min || W^{1/2} (M c - e_00) ||` where column `i` of `M`
/// holds the coefficients of `e_i f`.
fn solve_qr(f: &Poly2, basis: &[(usize, usize)], space: &SpaceSpec) -> Result<Vec<Complex64>, ApproxError> {
    let (fm, fn_) = f.bidegree();
    let rows_k = basis.iter().map(|b| b.0).max().unwrap_or(0) + fm + 1;
    let rows_l = basis.iter().map(|b| b.1).max().unwrap_or(0) + fn_ + 1;
    let nrows = rows_k * rows_l;
    let mut a = DMatrix::<Complex64>::zeros(nrows, basis.len());
    for (j, &(bk, bl)) in basis.iter().enumerate() {
        for (k, l, c) in f.terms() {
            let (pk, pl) = (bk + k, bl + l);
            a[(pk * rows_l + pl, j)] = c * space.weight_unchecked(pk, pl).sqrt();
        }
    }
    let mut b = DVector::<Complex64>::zeros(nrows);
    b[0] = ONE;
    let (q, r) = a.qr().unpack();
    let qb = q.adjoint() * b;
    let c = r
        .solve_upper_triangular(&qb)
        .ok_or_else(|| ApproxError::Numerical("QR factor is singular".into()))?;
    Ok(c.iter().copied().collect())
}

/// Assemble and solve in one step.
pub fn optimal_approximant(f: &Poly2, spec: BasisSpec, space: &SpaceSpec) -> Result<ApproximantResult, ApproxError> {
    solve_normal_equations(&assemble_gram(f, spec, space)?)
}

/// One row of a distance table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistancePoint {
    pub n: usize,
    pub basis_size: usize,
    pub distance_sq: f64,
    pub solver: SolverKind,
}

impl DistancePoint {
    pub fn distance(&self) -> f64 {
        self.distance_sq.sqrt()
    }
}

/// `d_n` for `n = 0..=n_max` over a nested basis family. One Gram matrix and
/// one factorization are shared; each `n` is then solved on the leading block
/// and checked against its explicit residual.
pub fn distance_table(
    f: &Poly2,
    space: &SpaceSpec,
    family: BasisFamily,
    n_max: usize,
) -> Result<Vec<DistancePoint>, ApproxError> {
    let sys = assemble_gram(f, family.at(n_max), space)?;
    let chol = factor(&sys)?;
    let y = chol.forward(&sys.rhs);
    let results = exec::map_range(n_max + 1, |n| {
        let size = family.at(n).len();
        let ratio = chol.pivot_ratio(size);
        let basis = &sys.basis[..size];
        let (coeffs, solver) = if ratio < QR_SWITCH_RATIO {
            (solve_qr(f, basis, space)?, SolverKind::Qr)
        } else {
            (chol.backward(&y[..size]), SolverKind::Cholesky)
        };
        let r = finish(&sys, basis, coeffs, solver, ratio)?;
        Ok(DistancePoint {
            n,
            basis_size: size,
            distance_sq: r.distance_sq,
            solver,
        })
    });
    results.into_iter().collect()
}

/// `d_n = dist(1, f * P_n)` over `TotalDegree(n)`, `n = 0..=n_max`.
pub fn distance_sequence(f: &Poly2, space: &SpaceSpec, n_max: usize) -> Result<Vec<f64>, ApproxError> {
    Ok(distance_table(f, space, BasisFamily::TotalDegree, n_max)?
        .into_iter()
        .map(|p| p.distance())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(usize, usize, f64)]) -> Poly2 {
        Poly2::from_real_terms(terms)
    }

    fn model() -> Poly2 {
        p(&[(0, 0, 2.0), (1, 0, -1.0), (0, 1, -1.0)])
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis_monomials(BasisSpec::total_degree(1)),
            vec![(0, 0), (0, 1), (1, 0)]
        );
        assert_eq!(basis_monomials(BasisSpec::diagonal(2)), vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(basis_monomials(BasisSpec::bidegree(1, 0)), vec![(0, 0), (1, 0)]);
        for spec in [
            BasisSpec::total_degree(7),
            BasisSpec::bidegree(3, 5),
            BasisSpec::diagonal(4),
        ] {
            assert_eq!(basis_monomials(spec).len(), spec.len());
        }
    }

    #[test]
    fn total_degree_bases_are_nested_prefixes() {
        let big = basis_monomials(BasisSpec::total_degree(9));
        for n in 0..9 {
            let small = basis_monomials(BasisSpec::total_degree(n));
            assert_eq!(&big[..small.len()], &small[..]);
        }
    }

    #[test]
    fn gram_examples() {
        let g = assemble_gram(&model(), BasisSpec::total_degree(0), &SpaceSpec::iso(0.0)).unwrap();
        assert_eq!(g.gram, vec![Complex64::new(6.0, 0.0)]);
        assert_eq!(g.rhs, vec![Complex64::new(2.0, 0.0)]);

        let g = assemble_gram(
            &p(&[(0, 0, 1.0), (1, 0, -1.0)]),
            BasisSpec::total_degree(0),
            &SpaceSpec::iso(1.0),
        )
        .unwrap();
        assert_eq!(g.gram, vec![Complex64::new(3.0, 0.0)]);
        assert_eq!(g.rhs, vec![ONE]);

        let g = assemble_gram(
            &p(&[(0, 0, 1.0), (1, 1, -1.0)]),
            BasisSpec::diagonal(0),
            &SpaceSpec::iso(1.5),
        )
        .unwrap();
        assert!((g.gram[0].re - (1.0 + 3f64.powf(1.5))).abs() < 1e-12);
        assert_eq!(g.rhs, vec![ONE]);
    }

    #[test]
    fn gram_matches_direct_inner_products() {
        let f = Poly2::from_terms([
            (0, 0, Complex64::new(1.0, 0.5)),
            (1, 0, Complex64::new(-0.3, 0.0)),
            (1, 2, Complex64::new(0.0, 0.7)),
        ])
        .unwrap();
        let space = SpaceSpec::aniso(1.3);
        let g = assemble_gram(&f, BasisSpec::total_degree(3), &space).unwrap();
        for (i, &(ki, li)) in g.basis.iter().enumerate() {
            let ei = &Poly2::monomial(ki, li, ONE) * &f;
            for (j, &(kj, lj)) in g.basis.iter().enumerate() {
                let ej = &Poly2::monomial(kj, lj, ONE) * &f;
                let want = crate::spaces::inner_product(&ej, &ei, &space).unwrap();
                assert!((g.entry(i, j) - want).norm() < 1e-12);
            }
            let want_v = crate::spaces::inner_product(&Poly2::one(), &ei, &space).unwrap();
            assert!((g.rhs[i] - want_v).norm() < 1e-15);
        }
        assert!(g.hermitian_defect() < 1e-12);
    }

    #[test]
    fn solve_examples() {
        let r = optimal_approximant(&model(), BasisSpec::total_degree(0), &SpaceSpec::iso(0.0)).unwrap();
        assert!((r.p.coeff(0, 0).re - 1.0 / 3.0).abs() < 1e-15);
        assert!((r.distance_sq - 1.0 / 3.0).abs() < 1e-15);

        let r = optimal_approximant(
            &p(&[(0, 0, 1.0), (1, 0, -1.0)]),
            BasisSpec::total_degree(0),
            &SpaceSpec::iso(1.0),
        )
        .unwrap();
        assert!((r.p.coeff(0, 0).re - 1.0 / 3.0).abs() < 1e-15);
        assert!((r.distance_sq - 2.0 / 3.0).abs() < 1e-15);

        let r = optimal_approximant(&Poly2::z1(), BasisSpec::total_degree(3), &SpaceSpec::iso(2.0)).unwrap();
        assert!(r.p.is_zero());
        assert_eq!(r.distance_sq, 1.0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            assemble_gram(&Poly2::zero(), BasisSpec::total_degree(2), &SpaceSpec::iso(1.0)).unwrap_err(),
            ApproxError::ZeroPolynomial
        );
    }

    #[test]
    fn univariate_space_needs_univariate_inputs() {
        let f = p(&[(0, 0, 1.0), (1, 0, -1.0)]);
        assert!(matches!(
            assemble_gram(&f, BasisSpec::total_degree(2), &SpaceSpec::uni(1.0)),
            Err(ApproxError::Precondition(_))
        ));
        let r = optimal_approximant(&f, BasisSpec::bidegree(2, 0), &SpaceSpec::uni(1.0)).unwrap();
        assert!((r.distance_sq - 12.0 / 25.0).abs() < 1e-14);
        assert!(matches!(
            assemble_gram(&Poly2::z2(), BasisSpec::bidegree(2, 0), &SpaceSpec::uni(1.0)),
            Err(ApproxError::Space(_))
        ));
    }

    #[test]
    fn qr_route_agrees_with_cholesky() {
        for alpha in [-1.0, 0.5, 2.0] {
            let sys = assemble_gram(&model(), BasisSpec::total_degree(6), &SpaceSpec::iso(alpha)).unwrap();
            let a = solve_with(&sys, SolveOptions::default()).unwrap();
            let b = solve_with(&sys, SolveOptions { force_qr: true }).unwrap();
            assert_eq!(a.solver, SolverKind::Cholesky);
            assert_eq!(b.solver, SolverKind::Qr);
            assert!((a.distance_sq - b.distance_sq).abs() < 1e-12);
            assert!((&a.p - &b.p).max_abs_coeff() < 1e-9);
        }
    }

    #[test]
    fn residual_is_orthogonal_to_basis_multiples() {
        let f = Poly2::from_terms([
            (0, 0, Complex64::new(3.0, 1.0)),
            (2, 1, Complex64::new(-1.0, 0.5)),
            (0, 2, Complex64::new(0.2, 0.0)),
        ])
        .unwrap();
        for space in [SpaceSpec::iso(1.0), SpaceSpec::aniso(0.5), SpaceSpec::iso(-1.0)] {
            let r = optimal_approximant(&f, BasisSpec::total_degree(5), &space).unwrap();
            assert!(r.orthogonality_defect(&f, &space) < 1e-9, "{space:?}");
            assert!(r.distance_sq >= 0.0 && r.distance_sq <= 1.0);
        }
    }

    #[test]
    fn table_matches_independent_solves() {
        let space = SpaceSpec::iso(1.5);
        let table = distance_table(&model(), &space, BasisFamily::TotalDegree, 6).unwrap();
        for pt in &table {
            let direct = optimal_approximant(&model(), BasisSpec::total_degree(pt.n), &space).unwrap();
            assert_eq!(pt.basis_size, direct.basis_size);
            assert!((pt.distance_sq - direct.distance_sq).abs() < 1e-13);
        }
        let seq = distance_sequence(&model(), &space, 6).unwrap();
        assert!(seq.windows(2).all(|w| w[1] <= w[0] + 1e-10));
    }

    #[test]
    fn hand_values_for_univariate_family() {
        // 1/H_{n+2} for f = 1 - z1 at alpha = 1.
        let f = p(&[(0, 0, 1.0), (1, 0, -1.0)]);
        let seq = distance_table(&f, &SpaceSpec::iso(1.0), BasisFamily::TotalDegree, 2).unwrap();
        let want = [2.0 / 3.0, 6.0 / 11.0, 12.0 / 25.0];
        for (pt, w) in seq.iter().zip(want) {
            assert!((pt.distance_sq - w).abs() < 1e-14);
        }
    }
}

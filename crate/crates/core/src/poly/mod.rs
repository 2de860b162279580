//! Dense bivariate and univariate polynomials with complex coefficients.
//!
//! `Poly2` stores the coefficient grid `a[k][l]` of `z1^k z2^l` row-major with
//! a tight bidegree: the last row and the last column each hold a nonzero
//! entry, except for the zero polynomial which is the single-entry grid `[0]`.

mod json;
mod parse;
pub(crate) mod resultant;
pub(crate) mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

pub use json::{PolyJson, PolyJsonTerm};
pub use parse::{parse_expression, parse_expression_with, ParseError, ParseOptions};
pub use resultant::{resultant_z2, Resultant, ResultantStatus};
pub use roots::{all_roots, roots_on_unit_circle, RootConfig};

/// Complex coefficient or evaluation point. Stored values are always finite.
pub type ComplexScalar = Complex64;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("coefficient at ({k}, {l}) is not finite")]
    NonFinite { k: usize, l: usize },
    #[error("grid has {got} entries, expected {rows}x{cols}")]
    GridShape { rows: usize, cols: usize, got: usize },
    #[error("term ({k}, {l}) lies outside the declared bidegree ({m}, {n})")]
    OutsideBidegree { k: usize, l: usize, m: usize, n: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("root finder did not converge after {iterations} iterations; iterates: {iterates:?}")]
    RootsNotConverged {
        iterations: usize,
        /// `(root, |r(root)|)` at the last iterate.
        iterates: Vec<(Complex64, f64)>,
    },
}

/// Which variable of a bivariate polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variable {
    Z1,
    Z2,
}

#[derive(Clone, PartialEq)]
pub struct Poly2 {
    deg1: usize,
    deg2: usize,
    coeffs: Vec<Complex64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 {
            deg1: 0,
            deg2: 0,
            coeffs: vec![ZERO],
        }
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    pub fn constant(c: Complex64) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c * z1^k * z2^l`.
    pub fn monomial(k: usize, l: usize, c: Complex64) -> Self {
        assert!(c.is_finite(), "monomial coefficient must be finite");
        if c == ZERO {
            return Self::zero();
        }
        let mut coeffs = vec![ZERO; (k + 1) * (l + 1)];
        coeffs[k * (l + 1) + l] = c;
        Poly2 {
            deg1: k,
            deg2: l,
            coeffs,
        }
    }

    pub fn z1() -> Self {
        Self::monomial(1, 0, ONE)
    }

    pub fn z2() -> Self {
        Self::monomial(0, 1, ONE)
    }

    /// Builds a polynomial from a row-major `rows x cols` grid (`rows` indexes
    /// the `z1` degree). The grid may be padded; the result is tightened.
    pub fn from_grid(rows: usize, cols: usize, coeffs: Vec<Complex64>) -> Result<Self, PolyError> {
        if rows == 0 || cols == 0 || coeffs.len() != rows * cols {
            return Err(PolyError::GridShape {
                rows,
                cols,
                got: coeffs.len(),
            });
        }
        if let Some(pos) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(PolyError::NonFinite {
                k: pos / cols,
                l: pos % cols,
            });
        }
        Ok(Self::from_raw(rows, cols, coeffs))
    }

    /// Sums the given `(k, l, c)` terms.
    pub fn from_terms<I>(terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (usize, usize, Complex64)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        let rows = terms.iter().map(|t| t.0).max().unwrap_or(0) + 1;
        let cols = terms.iter().map(|t| t.1).max().unwrap_or(0) + 1;
        let mut coeffs = vec![ZERO; rows * cols];
        for (k, l, c) in terms {
            if !c.is_finite() {
                return Err(PolyError::NonFinite { k, l });
            }
            coeffs[k * cols + l] += c;
        }
        Ok(Self::from_raw(rows, cols, coeffs))
    }

    /// Real-coefficient convenience constructor for tests and examples.
    pub fn from_real_terms(terms: &[(usize, usize, f64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, l, c)| (k, l, Complex64::new(c, 0.0)))).expect("finite real terms")
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, coeffs: Vec<Complex64>) -> Self {
        debug_assert_eq!(coeffs.len(), rows * cols);
        let mut m = None;
        let mut n = 0usize;
        for k in 0..rows {
            for l in 0..cols {
                if coeffs[k * cols + l] != ZERO {
                    m = Some(k);
                    n = n.max(l);
                }
            }
        }
        let Some(m) = m else {
            return Self::zero();
        };
        if m + 1 == rows && n + 1 == cols {
            return Poly2 {
                deg1: m,
                deg2: n,
                coeffs,
            };
        }
        let mut tight = Vec::with_capacity((m + 1) * (n + 1));
        for k in 0..=m {
            tight.extend_from_slice(&coeffs[k * cols..k * cols + n + 1]);
        }
        Poly2 {
            deg1: m,
            deg2: n,
            coeffs: tight,
        }
    }

    /// `(degree in z1, degree in z2)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.deg1, self.deg2)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(k, l, _)| k + l).max().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize, l: usize) -> Complex64 {
        if k > self.deg1 || l > self.deg2 {
            ZERO
        } else {
            self.coeffs[k * (self.deg2 + 1) + l]
        }
    }

    /// Row-major tight coefficient grid.
    pub fn grid(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    /// Nonzero terms in row-major order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        let cols = self.deg2 + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != ZERO)
            .map(move |(i, &c)| (i / cols, i % cols, c))
    }

    pub fn depends_on(&self, var: Variable) -> bool {
        match var {
            Variable::Z1 => self.deg1 > 0,
            Variable::Z2 => self.deg2 > 0,
        }
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Poly2 {
        Self::from_raw(
            self.deg1 + 1,
            self.deg2 + 1,
            self.coeffs.iter().map(|c| c * s).collect(),
        )
    }

    /// Coefficient-wise map over the tight grid; `f` receives `(k, l, a_kl)`.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, usize, Complex64) -> Complex64) -> Poly2 {
        let cols = self.deg2 + 1;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| f(i / cols, i % cols, c))
            .collect();
        Self::from_raw(self.deg1 + 1, cols, coeffs)
    }

    pub fn pow(&self, e: u32) -> Poly2 {
        let mut acc = Poly2::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let cols = self.deg2 + 1;
        let mut acc = ZERO;
        for row in self.coeffs.chunks_exact(cols).rev() {
            let inner = row.iter().rev().fold(ZERO, |s, &c| s * z2 + c);
            acc = acc * z1 + inner;
        }
        acc
    }

    /// Returns `lambda` with `other ~= lambda * self`: every coefficient of
    /// `other - lambda * self` is at most `tol` times the largest coefficient
    /// modulus of `other`. `None` if either input is zero.
    pub fn proportional(&self, other: &Poly2, tol: f64) -> Option<Complex64> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (pivot_idx, _) = self
            .coeffs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))?;
        let (k0, l0) = (pivot_idx / (self.deg2 + 1), pivot_idx % (self.deg2 + 1));
        let lambda = other.coeff(k0, l0) / self.coeff(k0, l0);
        let scale = other.max_abs_coeff();
        let m = self.deg1.max(other.deg1);
        let n = self.deg2.max(other.deg2);
        for k in 0..=m {
            for l in 0..=n {
                if (other.coeff(k, l) - lambda * self.coeff(k, l)).norm() > tol * scale {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Exact textual form accepted by [`parse_expression`]; every coefficient
    /// is printed with round-trip precision.
    pub fn to_expression(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, l, c) in self.terms() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({:?} + {:?}*i)", c.re, c.im));
            if k > 0 {
                out.push_str(&format!("*z1^{k}"));
            }
            if l > 0 {
                out.push_str(&format!("*z2^{l}"));
            }
        }
        out
    }
}

impl Default for Poly2 {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2[{:?}]({})", self.bidegree(), self)
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, l, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match k {
                0 => {}
                1 => write!(f, "*z1")?,
                _ => write!(f, "*z1^{k}")?,
            }
            match l {
                0 => {}
                1 => write!(f, "*z2")?,
                _ => write!(f, "*z2^{l}")?,
            }
        }
        Ok(())
    }
}

fn zip_grid(p: &Poly2, q: &Poly2, op: impl Fn(Complex64, Complex64) -> Complex64) -> Poly2 {
    let rows = p.deg1.max(q.deg1) + 1;
    let cols = p.deg2.max(q.deg2) + 1;
    let mut coeffs = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for l in 0..cols {
            coeffs.push(op(p.coeff(k, l), q.coeff(k, l)));
        }
    }
    Poly2::from_raw(rows, cols, coeffs)
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        zip_grid(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        zip_grid(self, rhs, |a, b| a - b)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.map_coeffs(|_, _, c| -c)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        if self.is_zero() || rhs.is_zero() {
            return Poly2::zero();
        }
        let rows = self.deg1 + rhs.deg1 + 1;
        let cols = self.deg2 + rhs.deg2 + 1;
        let mut coeffs = vec![ZERO; rows * cols];
        let rcols = rhs.deg2 + 1;
        for (k, l, a) in self.terms() {
            for (i, &b) in rhs.coeffs.iter().enumerate() {
                if b != ZERO {
                    coeffs[(k + i / rcols) * cols + l + i % rcols] += a * b;
                }
            }
        }
        Poly2::from_raw(rows, cols, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly2 {
            type Output = Poly2;
            fn $m(self, rhs: Poly2) -> Poly2 {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

/// Dense univariate polynomial `sum a_k z^k` with tight degree.
#[derive(Clone, PartialEq)]
pub struct Poly1 {
    coeffs: Vec<Complex64>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Poly1 { coeffs: vec![ZERO] }
    }

    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self, PolyError> {
        if let Some(k) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(PolyError::NonFinite { k, l: 0 });
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == ZERO {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Ok(Poly1 { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect()).expect("finite real coefficients")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Poly1 {
        if self.coeffs.len() <= 1 {
            return Poly1::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, &c)| c * (k + 1) as f64)
            .collect();
        Poly1::new(coeffs).expect("finite")
    }

    /// The polynomial as a bivariate one in the given variable.
    pub fn to_poly2(&self, var: Variable) -> Poly2 {
        match var {
            Variable::Z1 => Poly2::from_raw(self.coeffs.len(), 1, self.coeffs.clone()),
            Variable::Z2 => Poly2::from_raw(1, self.coeffs.len(), self.coeffs.clone()),
        }
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1{:?}", self.coeffs)
    }
}

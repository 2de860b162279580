//! Small dense complex kernels: LU determinant, Hermitian Cholesky and the
//! triangular solves that go with it. Matrices are row-major `n x n`.

use num_complex::Complex64;

use crate::exec;
use crate::poly::ZERO;

/// Determinant by LU with partial pivoting. Consumes the scratch matrix.
pub(crate) fn determinant(mut a: Vec<Complex64>, n: usize) -> Complex64 {
    debug_assert_eq!(a.len(), n * n);
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let (piv, piv_abs) = (col..n)
            .map(|r| (r, a[r * n + col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        if piv_abs == 0.0 {
            return ZERO;
        }
        if piv != col {
            for j in 0..n {
                a.swap(col * n + j, piv * n + j);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for r in col + 1..n {
            let factor = a[r * n + col] / d;
            if factor == ZERO {
                continue;
            }
            for j in col + 1..n {
                let v = a[col * n + j];
                a[r * n + j] -= factor * v;
            }
        }
    }
    det
}

/// Lower-triangular Cholesky factor `L` with `A = L L^H`, stored row-major.
#[derive(Debug, Clone)]
pub(crate) struct Cholesky {
    pub n: usize,
    pub l: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct PivotFailure {
    pub index: usize,
    pub pivot: f64,
}

impl Cholesky {
    /// Factors a Hermitian matrix; only the lower triangle is read. Fails when
    /// a squared pivot drops to `pivot_tol` or below.
    pub fn factor(a: &[Complex64], n: usize, pivot_tol: f64) -> Result<Self, PivotFailure> {
        let mut l = vec![ZERO; n * n];
        for j in 0..n {
            let row_j = &l[j * n..j * n + j];
            let d = a[j * n + j].re - row_j.iter().map(|x| x.norm_sqr()).sum::<f64>();
            // NaN pivots fail too.
            if d.is_nan() || d <= pivot_tol {
                return Err(PivotFailure { index: j, pivot: d });
            }
            let djj = d.sqrt();
            l[j * n + j] = Complex64::new(djj, 0.0);
            let (head, tail) = l.split_at_mut((j + 1) * n);
            let row_j = &head[j * n..j * n + j];
            exec::for_each_row_mut(tail, n, |offset, row_i| {
                let i = j + 1 + offset;
                let dot: Complex64 = row_i[..j].iter().zip(row_j).map(|(x, y)| x * y.conj()).sum();
                row_i[j] = (a[i * n + j] - dot) / djj;
            });
        }
        Ok(Cholesky { n, l })
    }

    pub fn diag(&self, i: usize) -> f64 {
        self.l[i * self.n + i].re
    }

    /// Squared ratio of the smallest to largest diagonal entry over the
    /// leading `m x m` block; a cheap reciprocal-condition estimate.
    pub fn pivot_ratio(&self, m: usize) -> f64 {
        let (lo, hi) = (0..m).fold((f64::INFINITY, 0.0f64), |(lo, hi), i| {
            let d = self.diag(i);
            (lo.min(d), hi.max(d))
        });
        if m == 0 {
            1.0
        } else {
            (lo / hi).powi(2)
        }
    }

    /// Solves `L y = b` on the leading `b.len()` block.
    pub fn forward(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut y = Vec::with_capacity(b.len());
        for i in 0..b.len() {
            let row = &self.l[i * n..i * n + i];
            let s: Complex64 = row.iter().zip(&y).map(|(a, b)| a * b).sum();
            y.push((b[i] - s) / self.l[i * n + i]);
        }
        y
    }

    /// Solves `L^H x = y` on the leading `y.len()` block.
    pub fn backward(&self, y: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let m = y.len();
        let mut x = y.to_vec();
        for i in (0..m).rev() {
            x[i] /= self.l[i * n + i];
            let xi = x[i];
            // Column i of L^H is row i of L conjugated.
            for (xk, lik) in x[..i].iter_mut().zip(&self.l[i * n..i * n + i]) {
                *xk -= lik.conj() * xi;
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn determinant_small() {
        let a = vec![c(-1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(-1.0, 0.0)];
        assert!((determinant(a, 2) - c(-5.0, 0.0)).norm() < 1e-15);
        let singular = vec![c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)];
        assert!(determinant(singular, 2).norm() < 1e-15);
        assert_eq!(determinant(vec![c(0.0, 2.0)], 1), c(0.0, 2.0));
    }

    #[test]
    fn cholesky_solves_hermitian_system() {
        // A = [[4, 1+i], [1-i, 3]]
        let a = vec![c(4.0, 0.0), c(1.0, 1.0), c(1.0, -1.0), c(3.0, 0.0)];
        let ch = Cholesky::factor(&a, 2, 1e-14).unwrap();
        let b = vec![c(1.0, 0.0), c(0.0, 2.0)];
        let x = ch.backward(&ch.forward(&b));
        for i in 0..2 {
            let ax: Complex64 = (0..2).map(|j| a[i * 2 + j] * x[j]).sum();
            assert!((ax - b[i]).norm() < 1e-14);
        }
        assert!(ch.pivot_ratio(2) > 0.0 && ch.pivot_ratio(2) <= 1.0);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = vec![c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)];
        let err = Cholesky::factor(&a, 2, 1e-12).unwrap_err();
        assert_eq!(err.index, 1);
    }

    #[test]
    fn leading_block_solves_are_prefix_consistent() {
        let a = vec![
            c(5.0, 0.0),
            c(1.0, -1.0),
            c(0.5, 0.0),
            c(1.0, 1.0),
            c(4.0, 0.0),
            c(0.0, 1.0),
            c(0.5, 0.0),
            c(0.0, -1.0),
            c(3.0, 0.0),
        ];
        let full = Cholesky::factor(&a, 3, 1e-14).unwrap();
        let lead: Vec<_> = vec![a[0], a[1], a[3], a[4]];
        let small = Cholesky::factor(&lead, 2, 1e-14).unwrap();
        let b = [c(1.0, 0.0), c(-1.0, 0.5)];
        let x_full = full.backward(&full.forward(&b));
        let x_small = small.backward(&small.forward(&b));
        for (u, v) in x_full.iter().zip(&x_small) {
            assert!((u - v).norm() < 1e-14);
        }
    }
}

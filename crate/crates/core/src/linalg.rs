//! Dense and sparse complex matrices with an LU factorization.
//!
//! The dense LU uses partial pivoting by modulus and keeps the pivot-growth
//! and residual metadata the operator layer reports. Column solves are
//! embarrassingly parallel, so the inverse is computed with rayon without
//! affecting determinism.

use num_complex::Complex;
use rayon::prelude::*;
use thiserror::Error;

use crate::scalar::{Scalar, C};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is numerically singular at pivot {0}")]
    Singular(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Scalar> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[C<T>] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn matvec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn max_entry_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> T {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|z| z.norm()).fold(T::zero(), |a, b| a + b))
            .fold(T::zero(), T::max)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// LU factorization with partial pivoting by modulus.
    pub fn lu(&self) -> Result<LuFactors<T>, LinalgError> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut pivots = Vec::with_capacity(n);
        let mut sign_flips = 0usize;
        let entry_scale = self.max_entry_norm();

        for col in 0..n {
            let mut best = col;
            let mut best_norm = a[col * n + col].norm_sqr();
            for row in (col + 1)..n {
                let nrm = a[row * n + col].norm_sqr();
                if nrm > best_norm {
                    best_norm = nrm;
                    best = row;
                }
            }
            if best_norm == T::zero() {
                return Err(LinalgError::Singular(col));
            }
            if best != col {
                for j in 0..n {
                    a.swap(col * n + j, best * n + j);
                }
                sign_flips += 1;
            }
            pivots.push(best);
            let pivot = a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] / pivot;
                a[row * n + col] = factor;
                for j in (col + 1)..n {
                    let upd = factor * a[col * n + j];
                    a[row * n + j] = a[row * n + j] - upd;
                }
            }
        }

        let factor_scale = a.iter().map(|z| z.norm()).fold(T::zero(), T::max);
        let pivot_growth = if entry_scale > T::zero() {
            factor_scale / entry_scale
        } else {
            T::one()
        };
        Ok(LuFactors {
            dim: n,
            lu: a,
            pivots,
            sign_flips,
            pivot_growth,
        })
    }
}

impl<T> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.dim + j]
    }
}

/// LU factors of a dense complex matrix.
#[derive(Clone, Debug)]
pub struct LuFactors<T> {
    dim: usize,
    lu: Vec<C<T>>,
    pivots: Vec<usize>,
    sign_flips: usize,
    pub pivot_growth: T,
}

impl<T: Scalar> LuFactors<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Determinant: product of U's diagonal, sign-corrected for row swaps.
    pub fn determinant(&self) -> C<T> {
        let mut det = Complex::new(T::one(), T::zero());
        for i in 0..self.dim {
            det = det * self.lu[i * self.dim + i];
        }
        if self.sign_flips % 2 == 1 {
            det = -det;
        }
        det
    }

    /// Solve `A x = b` in place.
    pub fn solve_in_place(&self, b: &mut [C<T>]) {
        let n = self.dim;
        assert_eq!(b.len(), n);
        for (col, &p) in self.pivots.iter().enumerate() {
            if p != col {
                b.swap(col, p);
            }
        }
        // Forward substitution with unit lower factor.
        for i in 1..n {
            let mut acc = b[i];
            for j in 0..i {
                acc = acc - self.lu[i * n + j] * b[j];
            }
            b[i] = acc;
        }
        // Back substitution.
        for i in (0..n).rev() {
            let mut acc = b[i];
            for j in (i + 1)..n {
                acc = acc - self.lu[i * n + j] * b[j];
            }
            b[i] = acc / self.lu[i * n + i];
        }
    }

    pub fn solve(&self, b: &[C<T>]) -> Vec<C<T>> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }

    /// Dense inverse by identity-column solves (parallel over columns).
    pub fn inverse(&self) -> CMatrix<T> {
        let n = self.dim;
        let columns: Vec<Vec<C<T>>> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mut col = vec![Complex::new(T::zero(), T::zero()); n];
                col[j] = Complex::new(T::one(), T::zero());
                self.solve_in_place(&mut col);
                col
            })
            .collect();
        let mut out = CMatrix::zeros(n);
        for (j, col) in columns.iter().enumerate() {
            for i in 0..n {
                out[(i, j)] = col[i];
            }
        }
        out
    }
}

/// Sparse complex matrix in row-list form; rows stay sorted by column.
#[derive(Clone, Debug)]
pub struct SparseMatrix<T> {
    dim: usize,
    rows: Vec<Vec<(usize, C<T>)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn push(&mut self, row: usize, col: usize, value: C<T>) {
        self.rows[row].push((col, value));
    }

    pub fn sort_rows(&mut self) {
        for row in &mut self.rows {
            row.sort_by_key(|&(c, _)| c);
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, C<T>)] {
        &self.rows[i]
    }

    pub fn get(&self, row: usize, col: usize) -> C<T> {
        self.rows[row]
            .iter()
            .find(|&&(c, _)| c == col)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn max_row_nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn matvec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(v.len(), self.dim);
        self.rows
            .iter()
            .map(|row| {
                row.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &(c, a)| {
                    acc + a * v[c]
                })
            })
            .collect()
    }

    /// `self * dense`, used for accumulating powers.
    pub fn mul_dense(&self, dense: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.dim, dense.dim());
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for &(k, a) in &self.rows[i] {
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * dense[(k, j)];
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> CMatrix<T> {
        let mut out = CMatrix::zeros(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                out[(i, j)] = v;
            }
        }
        out
    }

    /// Entries as sorted (row, col, value) triplets.
    pub fn triplets(&self) -> Vec<(usize, usize, C<T>)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                out.push((i, j, v));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lu_determinant_and_solve() {
        let m = CMatrix::from_fn(3, |i, j| {
            c([[1.0, 2.0, 3.0], [0.0, 1.0, 4.0], [5.0, 6.0, 0.0]][i][j], 0.0)
        });
        let lu = m.lu().unwrap();
        approx::assert_relative_eq!(lu.determinant().re, 1.0, max_relative = 1e-12);
        assert!(lu.determinant().im.abs() < 1e-12);

        let inv = lu.inverse();
        let prod = m.mul(&inv);
        let id = CMatrix::identity(3);
        for i in 0..3 {
            for j in 0..3 {
                assert!((prod[(i, j)] - id[(i, j)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn lu_complex_entries() {
        let m = CMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(0.0, 1.0),
            (0, 1) => c(1.0, 0.0),
            (1, 0) => c(-1.0, 0.0),
            _ => c(0.0, 1.0),
        });
        // det = i*i - 1*(-1) = -1 + 1 = 0: singular.
        assert!(m.lu().is_err());

        let m = CMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => c(0.0, 2.0),
            (0, 1) => c(1.0, 0.0),
            (1, 0) => c(-1.0, 0.0),
            _ => c(0.0, 1.0),
        });
        let lu = m.lu().unwrap();
        let det = lu.determinant();
        assert!((det - c(-1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn empty_matrix_determinant_is_one() {
        let m = CMatrix::<f64>::zeros(0);
        let lu = m.lu().unwrap();
        assert_eq!(lu.determinant(), c(1.0, 0.0));
    }

    #[test]
    fn sparse_matvec_matches_dense() {
        let mut s = SparseMatrix::new(3);
        s.push(0, 1, c(2.0, 0.0));
        s.push(1, 2, c(0.0, 1.0));
        s.push(2, 0, c(-1.0, 0.5));
        s.sort_rows();
        let v = vec![c(1.0, 0.0), c(0.0, 1.0), c(2.0, -1.0)];
        let lhs = s.matvec(&v);
        let rhs = s.to_dense().matvec(&v);
        for (a, b) in lhs.iter().zip(&rhs) {
            assert!((a - b).norm() < 1e-15);
        }
    }
}

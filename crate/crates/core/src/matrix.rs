//! Dense matrices over the commutative quaternions.
//!
//! Scalars commute, so `qA = Aq`, but matrix multiplication does not. Each
//! matrix splits as `A = A1 + j A2` with complex `A1`, `A2`; that split is
//! what the adjoint and spectral routines work with.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::quat::{CQuat, Conjugation};

/// Relative tolerance for the structure predicates and matrix comparisons:
/// `max|A - B| <= 1e-9 (1 + max|entry|)`.
pub const PREDICATE_TOL: f64 = 1e-9;

/// Products with at least this many scalar multiply-adds fan out by rows.
const PAR_MUL_THRESHOLD: usize = 1 << 15;

#[derive(Debug, Clone, PartialEq)]
pub struct CQMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CQuat>,
}

impl CQMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<CQuat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                op: "construct",
                lhs: (rows, cols),
                rhs: (data.len(), 1),
            });
        }
        if !data.iter().all(|q| q.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(CQMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        CQMatrix {
            rows,
            cols,
            data: vec![CQuat::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        CQMatrix::from_fn(n, n, |i, j| if i == j { CQuat::ONE } else { CQuat::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CQuat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CQMatrix { rows, cols, data }
    }

    /// Builds from nested rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<CQuat>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CQMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    /// `A1 + j A2` from its complex parts.
    pub fn from_parts(a1: &CMatrix, a2: &CMatrix) -> Result<Self> {
        if a1.shape() != a2.shape() {
            return Err(Error::Shape {
                op: "from_parts",
                lhs: a1.shape(),
                rhs: a2.shape(),
            });
        }
        let (rows, cols) = a1.shape();
        Ok(CQMatrix::from_fn(rows, cols, |i, j| {
            let (c1, c2) = (a1[(i, j)], a2[(i, j)]);
            CQuat::new(c1.re, c1.im, c2.re, c2.im)
        }))
    }

    /// The complex parts `(A1, A2)` with `A = A1 + j A2`.
    pub fn split(&self) -> (CMatrix, CMatrix) {
        let a1 = CMatrix::from_fn(self.rows, self.cols, |i, j| {
            let q = self[(i, j)];
            Complex64::new(q.t, q.x)
        });
        let a2 = CMatrix::from_fn(self.rows, self.cols, |i, j| {
            let q = self[(i, j)];
            Complex64::new(q.y, q.z)
        });
        (a1, a2)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[CQuat] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CQuat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(CQuat) -> CQuat) -> Self {
        CQMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
        }
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn zip_with(&self, other: &CQMatrix, op: &'static str, f: impl Fn(CQuat, CQuat) -> CQuat) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                op,
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        Ok(CQMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    pub fn add(&self, other: &CQMatrix) -> Result<Self> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &CQMatrix) -> Result<Self> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    /// `qA`, which equals `Aq` since scalars commute.
    pub fn scalar_mul(&self, q: CQuat) -> Self {
        self.map(|a| q * a)
    }

    pub fn mul(&self, other: &CQMatrix) -> Result<Self> {
        let work = self.rows * self.cols * other.cols;
        let exec = if work >= PAR_MUL_THRESHOLD {
            Execution::default()
        } else {
            Execution::Sequential
        };
        self.mul_with(other, exec)
    }

    /// Matrix product under an explicit execution policy. Every entry is
    /// accumulated in the same order under either policy, so results are
    /// bitwise identical.
    pub fn mul_with(&self, other: &CQMatrix, exec: Execution) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "mul",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        let rows = exec.map_range(self.rows, |i| {
            let a_row = self.row(i);
            (0..other.cols)
                .map(|j| {
                    a_row
                        .iter()
                        .enumerate()
                        .fold(CQuat::ZERO, |acc, (k, &a)| acc + a * other[(k, j)])
                })
                .collect::<Vec<_>>()
        });
        Ok(CQMatrix {
            rows: self.rows,
            cols: other.cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn mul_vec(&self, v: &[CQuat]) -> Result<Vec<CQuat>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                op: "mul_vec",
                lhs: self.shape(),
                rhs: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| *a * *b).sum())
            .collect())
    }

    /// Shape `cols x rows`.
    pub fn transpose(&self) -> Self {
        CQMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise principal conjugate `A^(i)`.
    pub fn conj(&self, c: Conjugation) -> Self {
        self.map(|q| q.conj(c))
    }

    /// The `i`-th conjugate transpose `(A^(i))^T`.
    pub fn dagger(&self, c: Conjugation) -> Self {
        CQMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj(c))
    }

    /// Largest component magnitude over all entries.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, q| acc.max(q.magnitude()))
    }

    /// Largest component magnitude of `self - other`; infinite when shapes
    /// differ.
    pub fn max_abs_diff(&self, other: &CQMatrix) -> f64 {
        if self.shape() != other.shape() {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((*a - *b).magnitude()))
    }

    /// Scale-aware equality: `max|A - B| <= tol (1 + max(max|A|, max|B|))`.
    pub fn approx_eq(&self, other: &CQMatrix, tol: f64) -> bool {
        let scale = 1.0 + self.max_abs().max(other.max_abs());
        self.max_abs_diff(other) <= tol * scale
    }

    /// `A A^{†i} = A^{†i} A`.
    pub fn is_normal(&self, c: Conjugation) -> Result<bool> {
        self.require_square("is_normal")?;
        let d = self.dagger(c);
        Ok(self.mul(&d)?.approx_eq(&d.mul(self)?, PREDICATE_TOL))
    }

    /// `A = A^{†i}`.
    pub fn is_hermitian(&self, c: Conjugation) -> Result<bool> {
        self.require_square("is_hermitian")?;
        Ok(self.approx_eq(&self.dagger(c), PREDICATE_TOL))
    }

    /// `A A^{†i} = I`.
    pub fn is_unitary(&self, c: Conjugation) -> Result<bool> {
        let n = self.require_square("is_unitary")?;
        Ok(self
            .mul(&self.dagger(c))?
            .approx_eq(&CQMatrix::identity(n), PREDICATE_TOL))
    }

    /// Two-sided inverse, computed through the complex adjoint.
    pub fn inverse(&self) -> Result<Self> {
        crate::adjoint::mat_inverse_via_eta(self)
    }
}

impl Index<(usize, usize)> for CQMatrix {
    type Output = CQuat;

    fn index(&self, (i, j): (usize, usize)) -> &CQuat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CQMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CQuat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for CQMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| format!("({q})")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

//! Complex adjoint matrices, q-determinants, inverses and spectra.
//!
//! For `A = A1 + j A2` the complex adjoint is the `2n x 2n` matrix
//! `eta(A) = [[A1, A2], [A2, A1]]`. Conjugating by
//! `S = [[I, I], [I, -I]] / sqrt(2)` turns it into
//! `diag(A1 + A2, A1 - A2)`, so the determinant, the inverse and the
//! `2n` complex eigenvalues are all computed from those two `n x n` blocks.
//!
//! Eigenvalues are restricted to complex multipliers: `Ax = λx` with
//! `λ = a + ib`. An eigenvector `u` of `A1 + A2` lifts to `x = u (1 + j)`,
//! one of `A1 - A2` lifts to `x = u (1 - j)`.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::eigen::{complex_eig, inverse_iteration};
use crate::error::{Error, Result};
use crate::matrix::{CQMatrix, PREDICATE_TOL};
use crate::par::Execution;
use crate::quat::CQuat;

/// `|det_q(A)| <= DET_SINGULAR_TOL (1 + ‖A‖∞)^{2n}` counts as singular.
pub const DET_SINGULAR_TOL: f64 = 1e-10;

/// `min |λ| <= EIGEN_ZERO_TOL (1 + ‖A‖∞)` counts as a zero eigenvalue.
pub const EIGEN_ZERO_TOL: f64 = 1e-8;

/// Eigenpair residuals must satisfy `‖Ax − λx‖∞ <= RESIDUAL_TOL (1 + ‖A‖∞)`.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Which diagonal block of the reduced adjoint an eigenvalue came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// `A1 + A2`, eigenvectors `u (1 + j)`.
    Plus,
    /// `A1 - A2`, eigenvectors `u (1 - j)`.
    Minus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// `2n` eigenvalues, ascending by real then imaginary part.
    pub eigenvalues: Vec<Complex64>,
    pub blocks: Vec<Block>,
    /// One quaternion vector per eigenvalue, when requested.
    pub eigenvectors: Option<Vec<Vec<CQuat>>>,
    /// `‖Ax − λx‖∞` per eigenpair; empty without eigenvectors.
    pub residuals: Vec<f64>,
    /// Residual bound `RESIDUAL_TOL (1 + ‖A‖∞)` for this matrix.
    pub tolerance: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn product(&self) -> Complex64 {
        self.eigenvalues.iter().product()
    }

    pub fn sum(&self) -> Complex64 {
        self.eigenvalues.iter().sum()
    }

    pub fn min_abs(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|l| l.norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn residuals_within_tolerance(&self) -> bool {
        self.residuals.iter().all(|&r| r <= self.tolerance)
    }
}

/// The three invertibility verdicts for a square matrix: a working inverse,
/// a nonzero q-determinant and the absence of a zero eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct InvertibilityReport {
    pub det_q: Complex64,
    pub det_q_abs: f64,
    pub det_threshold: f64,
    pub by_determinant: bool,
    pub min_abs_eigenvalue: f64,
    pub eigen_threshold: f64,
    pub by_eigenvalues: bool,
    pub by_inverse: bool,
}

impl InvertibilityReport {
    pub fn invertible(&self) -> bool {
        self.by_determinant
    }

    pub fn verdicts_agree(&self) -> bool {
        self.by_determinant == self.by_eigenvalues && self.by_determinant == self.by_inverse
    }
}

/// `‖A‖∞`: the largest component magnitude over all entries.
pub fn inf_norm(a: &CQMatrix) -> f64 {
    a.max_abs()
}

/// The complex adjoint `[[A1, A2], [A2, A1]]`.
pub fn eta(a: &CQMatrix) -> Result<CMatrix> {
    a.require_square("eta")?;
    let (a1, a2) = a.split();
    Ok(CMatrix::from_blocks(&a1, &a2, &a2, &a1))
}

/// Left inverse of [`eta`]: recovers `A1 + j A2` from a matrix with the
/// block-swap structure.
pub fn eta_inverse_map(m: &CMatrix) -> Result<CQMatrix> {
    if !m.is_square() || !m.rows().is_multiple_of(2) {
        return Err(Error::NotInEtaImage {
            deviation: f64::INFINITY,
        });
    }
    let n = m.rows() / 2;
    let tl = m.block(0, 0, n, n);
    let tr = m.block(0, n, n, n);
    let bl = m.block(n, 0, n, n);
    let br = m.block(n, n, n, n);
    let deviation = tl.max_abs_diff(&br).max(tr.max_abs_diff(&bl));
    if deviation > PREDICATE_TOL * (1.0 + m.max_abs()) {
        return Err(Error::NotInEtaImage { deviation });
    }
    let half = Complex64::new(0.5, 0.0);
    let a1 = tl.add(&br)?.scale(half);
    let a2 = tr.add(&bl)?.scale(half);
    CQMatrix::from_parts(&a1, &a2)
}

/// `(A1 + A2, A1 - A2)`, the diagonal blocks of the reduced adjoint.
pub fn block_diagonalize(a: &CQMatrix) -> Result<(CMatrix, CMatrix)> {
    a.require_square("block_diagonalize")?;
    let (a1, a2) = a.split();
    Ok((a1.add(&a2)?, a1.sub(&a2)?))
}

/// `det(eta(A))`, evaluated as `det(A1 + A2) · det(A1 - A2)`.
pub fn det_q(a: &CQMatrix) -> Result<Complex64> {
    let (plus, minus) = block_diagonalize(a)?;
    Ok(plus.det()? * minus.det()?)
}

/// Threshold under which `|det_q(A)|` is treated as zero.
pub fn det_threshold(a: &CQMatrix) -> f64 {
    DET_SINGULAR_TOL * (1.0 + inf_norm(a)).powi(2 * a.rows() as i32)
}

fn eigen_threshold(a: &CQMatrix) -> f64 {
    EIGEN_ZERO_TOL * (1.0 + inf_norm(a))
}

/// Builds `B = B1 + j B2` from the inverted blocks and checks `AB = BA = I`.
/// No determinant gate; fails only on an exactly singular block or a bad
/// product.
fn construct_inverse(a: &CQMatrix) -> Result<CQMatrix> {
    let n = a.require_square("inverse")?;
    let (plus, minus) = block_diagonalize(a)?;
    let (p_lu, m_lu) = (plus.lu()?, minus.lu()?);
    if p_lu.is_singular() || m_lu.is_singular() {
        return Err(Error::NotInvertible {
            magnitude: (p_lu.det() * m_lu.det()).norm(),
        });
    }
    let (p_inv, m_inv) = (p_lu.inverse(), m_lu.inverse());
    let half = Complex64::new(0.5, 0.0);
    let b1 = p_inv.add(&m_inv)?.scale(half);
    let b2 = p_inv.sub(&m_inv)?.scale(half);
    let b = CQMatrix::from_parts(&b1, &b2)?;

    let id = CQMatrix::identity(n);
    let ok = b.as_slice().iter().all(|q| q.is_finite())
        && a.mul(&b)?.approx_eq(&id, PREDICATE_TOL)
        && b.mul(a)?.approx_eq(&id, PREDICATE_TOL);
    if !ok {
        return Err(Error::NotInvertible {
            magnitude: (p_lu.det() * m_lu.det()).norm(),
        });
    }
    Ok(b)
}

/// Two-sided inverse through the reduced adjoint. Rejects matrices whose
/// q-determinant is below [`det_threshold`].
pub fn mat_inverse_via_eta(a: &CQMatrix) -> Result<CQMatrix> {
    let d = det_q(a)?;
    if d.norm() <= det_threshold(a) {
        return Err(Error::NotInvertible { magnitude: d.norm() });
    }
    construct_inverse(a)
}

fn order(a: &(Complex64, Block, usize), b: &(Complex64, Block, usize)) -> Ordering {
    let by = |x: f64, y: f64| x.partial_cmp(&y).unwrap_or(Ordering::Equal);
    by(a.0.re, b.0.re).then(by(a.0.im, b.0.im))
}

fn sorted_spectrum(
    plus: Vec<Complex64>,
    minus: Vec<Complex64>,
) -> Vec<(Complex64, Block, usize)> {
    // Block-P values precede block-M values, so a stable sort keeps that
    // order on exact ties.
    let mut all: Vec<(Complex64, Block, usize)> = plus
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, Block::Plus, i))
        .chain(minus.into_iter().enumerate().map(|(i, l)| (l, Block::Minus, i)))
        .collect();
    all.sort_by(order);
    all
}

/// The `2n` complex eigenvalues of `A`, without eigenvectors.
pub fn eigenvalues(a: &CQMatrix) -> Result<Spectrum> {
    eigenvalues_with(a, Execution::default())
}

pub fn eigenvalues_with(a: &CQMatrix, exec: Execution) -> Result<Spectrum> {
    let (plus, minus) = block_diagonalize(a)?;
    let (ep, em) = exec.join(|| complex_eig(&plus), || complex_eig(&minus));
    let all = sorted_spectrum(ep?, em?);
    Ok(Spectrum {
        eigenvalues: all.iter().map(|e| e.0).collect(),
        blocks: all.iter().map(|e| e.1).collect(),
        eigenvectors: None,
        residuals: Vec::new(),
        tolerance: RESIDUAL_TOL * (1.0 + inf_norm(a)),
    })
}

/// Eigenvalues together with reconstructed quaternion eigenvectors and
/// their residuals.
pub fn eigenpairs(a: &CQMatrix) -> Result<Spectrum> {
    eigenpairs_with(a, Execution::default())
}

pub fn eigenpairs_with(a: &CQMatrix, exec: Execution) -> Result<Spectrum> {
    let (plus, minus) = block_diagonalize(a)?;
    let (ep, em) = exec.join(|| complex_eig(&plus), || complex_eig(&minus));
    let all = sorted_spectrum(ep?, em?);

    let mut eigenvalues = Vec::with_capacity(all.len());
    let mut blocks = Vec::with_capacity(all.len());
    let mut vectors = Vec::with_capacity(all.len());
    let mut residuals = Vec::with_capacity(all.len());
    for (k, &(lambda, block, _)) in all.iter().enumerate() {
        // repeated eigenvalues from the same block get distinct start vectors
        let variant = all[..k]
            .iter()
            .filter(|e| e.1 == block && e.0 == lambda)
            .count();
        let (m, sign) = match block {
            Block::Plus => (&plus, 1.0),
            Block::Minus => (&minus, -1.0),
        };
        let u = inverse_iteration(m, lambda, variant);
        let x: Vec<CQuat> = u
            .iter()
            .map(|c| CQuat::new(c.re, c.im, sign * c.re, sign * c.im))
            .collect();
        residuals.push(residual(a, lambda, &x)?);
        eigenvalues.push(lambda);
        blocks.push(block);
        vectors.push(x);
    }
    Ok(Spectrum {
        eigenvalues,
        blocks,
        eigenvectors: Some(vectors),
        residuals,
        tolerance: RESIDUAL_TOL * (1.0 + inf_norm(a)),
    })
}

/// `‖Ax − λx‖∞` over all quaternion components.
pub fn residual(a: &CQMatrix, lambda: Complex64, x: &[CQuat]) -> Result<f64> {
    let l = CQuat::from_complex(lambda);
    let ax = a.mul_vec(x)?;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(lhs, xi)| (*lhs - l * *xi).magnitude())
        .fold(0.0, f64::max))
}

/// Evaluates the three invertibility criteria independently.
pub fn is_invertible(a: &CQMatrix) -> Result<InvertibilityReport> {
    let d = det_q(a)?;
    let det_threshold = det_threshold(a);
    let spectrum = eigenvalues(a)?;
    let min_abs = spectrum.min_abs();
    let eigen_threshold = eigen_threshold(a);
    Ok(InvertibilityReport {
        det_q: d,
        det_q_abs: d.norm(),
        det_threshold,
        by_determinant: d.norm() > det_threshold,
        min_abs_eigenvalue: min_abs,
        eigen_threshold,
        by_eigenvalues: min_abs > eigen_threshold,
        by_inverse: construct_inverse(a).is_ok(),
    })
}

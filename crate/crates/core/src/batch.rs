//! Batch evaluation over many matrices.
//!
//! Each matrix is an independent work item, so the parallel and sequential
//! policies return identical vectors in input order.

use num_complex::Complex64;

use crate::adjoint::{self, InvertibilityReport, Spectrum};
use crate::error::Result;
use crate::matrix::CQMatrix;
use crate::par::Execution;

pub fn det_q(mats: &[CQMatrix], exec: Execution) -> Vec<Result<Complex64>> {
    exec.map(mats, adjoint::det_q)
}

/// Eigenvalues per matrix. The two blocks of each matrix are solved
/// sequentially; the fan-out is across matrices.
pub fn eigenvalues(mats: &[CQMatrix], exec: Execution) -> Vec<Result<Spectrum>> {
    exec.map(mats, |a| adjoint::eigenvalues_with(a, Execution::Sequential))
}

pub fn eigenpairs(mats: &[CQMatrix], exec: Execution) -> Vec<Result<Spectrum>> {
    exec.map(mats, |a| adjoint::eigenpairs_with(a, Execution::Sequential))
}

pub fn inverses(mats: &[CQMatrix], exec: Execution) -> Vec<Result<CQMatrix>> {
    exec.map(mats, adjoint::mat_inverse_via_eta)
}

pub fn invertibility(mats: &[CQMatrix], exec: Execution) -> Vec<Result<InvertibilityReport>> {
    exec.map(mats, adjoint::is_invertible)
}

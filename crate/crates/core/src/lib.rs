//! Commutative (Segre) quaternions and matrices over them.
//!
//! - [`quat`]: scalar arithmetic, principal conjugations, quartic norm,
//!   inverses and zero divisors.
//! - [`hamilton`]: the 4x4 real Hamilton matrix and the 2x2 complex
//!   representation of a scalar.
//! - [`matrix`]: dense quaternion matrices, conjugate transposes and the
//!   normal / Hermitian / unitary predicates.
//! - [`adjoint`]: the complex adjoint, q-determinant, inverses and the
//!   `2n` complex eigenvalues with eigenvectors.
//! - [`batch`]: the same operations over many matrices, parallel when the
//!   `parallel` feature is enabled.

pub mod adjoint;
pub mod batch;
pub mod cmatrix;
pub mod eigen;
pub mod error;
pub mod hamilton;
pub mod matrix;
pub mod par;
pub mod quat;

pub use adjoint::{
    block_diagonalize, det_q, eigenpairs, eigenvalues, eta, eta_inverse_map, is_invertible,
    mat_inverse_via_eta, Block, InvertibilityReport, Spectrum,
};
pub use cmatrix::CMatrix;
pub use eigen::complex_eig;
pub use error::{Error, Result};
pub use hamilton::{phi, sigma, sigma_apply, sigma_det, sigma_trace, CMat2, RealMat4};
pub use matrix::CQMatrix;
pub use num_complex::Complex64;
pub use par::Execution;
pub use quat::{CQuat, Conjugation, CplxPair, IdempotentPair};

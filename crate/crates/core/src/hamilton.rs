//! Matrix representations of a single commutative quaternion.
//!
//! `sigma(q)` is the 4x4 real matrix of `p -> qp` in the basis `{1, i, j, k}`
//! and `phi(q)` the 2x2 complex matrix `[[c1, c2], [c2, c1]]`. Both are
//! injective ring homomorphisms.

use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::quat::CQuat;

/// Row-major 4x4 real matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealMat4(pub [[f64; 4]; 4]);

impl RealMat4 {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        RealMat4(m)
    }

    pub fn zero() -> Self {
        RealMat4::default()
    }

    pub fn scale(&self, s: f64) -> Self {
        RealMat4(self.0.map(|row| row.map(|v| s * v)))
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        RealMat4(out)
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        self.0
            .map(|row| row.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
    }

    /// Pairwise sum, so a constant diagonal `t` gives exactly `4t`.
    pub fn trace(&self) -> f64 {
        let d = &self.0;
        (d[0][0] + d[1][1]) + (d[2][2] + d[3][3])
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &RealMat4) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |acc, v| acc.max(v.abs()))
    }
}

impl Add for RealMat4 {
    type Output = RealMat4;

    fn add(self, o: RealMat4) -> RealMat4 {
        let mut out = self.0;
        for (row, orow) in out.iter_mut().zip(o.0.iter()) {
            for (a, b) in row.iter_mut().zip(orow.iter()) {
                *a += b;
            }
        }
        RealMat4(out)
    }
}

impl Mul for RealMat4 {
    type Output = RealMat4;

    fn mul(self, o: RealMat4) -> RealMat4 {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        RealMat4(out)
    }
}

impl std::ops::Neg for RealMat4 {
    type Output = RealMat4;

    fn neg(self) -> RealMat4 {
        self.scale(-1.0)
    }
}

/// 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2(pub [[Complex64; 2]; 2]);

impl CMat2 {
    pub fn det(&self) -> Complex64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn max_abs_diff(&self, other: &CMat2) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).norm()))
    }

    /// True when the matrix has the `[[c1, c2], [c2, c1]]` pattern of the
    /// image of [`phi`].
    pub fn in_phi_image(&self) -> bool {
        self.0[0][0] == self.0[1][1] && self.0[0][1] == self.0[1][0]
    }
}

impl Add for CMat2 {
    type Output = CMat2;

    fn add(self, o: CMat2) -> CMat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        CMat2([[a + e, b + f], [c + g, d + h]])
    }
}

impl Mul for CMat2 {
    type Output = CMat2;

    fn mul(self, o: CMat2) -> CMat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = o.0;
        CMat2([[a * e + b * g, a * f + b * h], [c * e + d * g, c * f + d * h]])
    }
}

/// The Hamilton matrix of `q`.
pub fn sigma(q: CQuat) -> RealMat4 {
    let CQuat { t, x, y, z } = q;
    RealMat4([
        [t, -x, y, -z],
        [x, t, z, y],
        [y, -z, t, -x],
        [z, y, x, t],
    ])
}

/// Recovers `q` from column 0 of its Hamilton matrix (the image of `1`).
pub fn from_sigma(m: &RealMat4) -> CQuat {
    CQuat::new(m.0[0][0], m.0[1][0], m.0[2][0], m.0[3][0])
}

/// `sigma(q) * vec(q1)`, which equals `q * q1`.
pub fn sigma_apply(q: CQuat, q1: CQuat) -> CQuat {
    CQuat::from_array(sigma(q).apply(q1.to_array()))
}

/// Trace of `sigma(q)`, always `4t`.
pub fn sigma_trace(q: CQuat) -> f64 {
    sigma(q).trace()
}

/// Determinant of `sigma(q)` from its block factorization
/// `[(t+y)² + (x+z)²]·[(t−y)² + (x−z)²]`.
pub fn sigma_det(q: CQuat) -> f64 {
    let CQuat { t, x, y, z } = q;
    ((t + y).powi(2) + (x + z).powi(2)) * ((t - y).powi(2) + (x - z).powi(2))
}

/// `sigma(i)`, `sigma(j)`, `sigma(k)`.
pub fn basis_matrices() -> [RealMat4; 3] {
    [sigma(CQuat::I), sigma(CQuat::J), sigma(CQuat::K)]
}

/// The 2x2 complex representation `[[c1, c2], [c2, c1]]`.
pub fn phi(q: CQuat) -> CMat2 {
    let pair = q.decompose();
    CMat2([[pair.c1, pair.c2], [pair.c2, pair.c1]])
}

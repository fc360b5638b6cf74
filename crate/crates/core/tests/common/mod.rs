//! Seeded generators and independent oracles shared by the integration
//! tests. Nothing here calls into the library's LU or eigen code.

#![allow(dead_code)]

use cquat::{CMatrix, CQMatrix, CQuat, Complex64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn quat(rng: &mut impl Rng) -> CQuat {
    CQuat::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

/// A nonzero zero divisor `p e+ + 0 e-` or `0 e+ + m e-`.
pub fn zero_divisor(rng: &mut impl Rng) -> CQuat {
    let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    let zero = Complex64::new(0.0, 0.0);
    if rng.gen_bool(0.5) {
        CQuat::from_idempotent(cquat::IdempotentPair { p: c, m: zero })
    } else {
        CQuat::from_idempotent(cquat::IdempotentPair { p: zero, m: c })
    }
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> CQMatrix {
    CQMatrix::from_fn(rows, cols, |_, _| quat(rng))
}

/// Random square matrix with `|det_q| >= 1e-6`.
pub fn invertible(rng: &mut impl Rng, n: usize) -> CQMatrix {
    loop {
        let a = matrix(rng, n, n);
        if lu_det(&cquat::eta(&a).unwrap()).norm() >= 1e-6 {
            return a;
        }
    }
}

pub fn cmatrix(rng: &mut impl Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// `|a - b| <= tol * max(|a|, |b|, floor)`.
pub fn close(a: f64, b: f64, tol: f64, floor: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(floor)
}

pub fn close_c(a: Complex64, b: Complex64, tol: f64, floor: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(floor)
}

/// Determinant by Gaussian elimination with complete pivoting.
pub fn lu_det(m: &CMatrix) -> Complex64 {
    let n = m.rows();
    let mut a: Vec<Vec<Complex64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let (mut pi, mut pj, mut best) = (k, k, -1.0);
        for i in k..n {
            for j in k..n {
                if a[i][j].norm() > best {
                    best = a[i][j].norm();
                    pi = i;
                    pj = j;
                }
            }
        }
        if best == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pi != k {
            a.swap(pi, k);
            det = -det;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            det = -det;
        }
        let pivot = a[k][k];
        det *= pivot;
        for i in k + 1..n {
            let f = a[i][k] / pivot;
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// Determinant of a 4x4 real matrix by elimination with partial pivoting.
pub fn real_det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut a = *m;
    let mut det = 1.0;
    for k in 0..4 {
        let p = (k..4)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap();
        if a[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..4 {
            let f = a[i][k] / a[k][k];
            for j in k..4 {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    det
}

/// Characteristic polynomial coefficients `[c0, ..., cn]` of
/// `det(λI − M)` (monic, `cn = 1`) by Faddeev–LeVerrier.
pub fn char_poly(m: &CMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = CMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = M (M_{k-1} + c_{n-k+1} I)
        let mut inner = mk.clone();
        for i in 0..n {
            inner[(i, i)] += coeffs[n - k + 1];
        }
        mk = m.mul(&inner).unwrap();
        coeffs[n - k] = -mk.trace() / k as f64;
    }
    coeffs
}

/// Roots of a monic polynomial by Durand–Kerner iteration.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| roots[i] - roots[j])
                .product();
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Greedy matching distance between two multisets of complex numbers.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in a {
        let (idx, d) = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, y)| (i, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .unwrap();
        used[idx] = true;
        worst = worst.max(d);
    }
    worst
}

/// `q^(1) q^(2) q^(3) / (q q^(1) q^(2) q^(3))`, the conjugate-product
/// inverse.
pub fn conjugate_product_inverse(q: CQuat) -> CQuat {
    use cquat::Conjugation::*;
    let adj = q.conj(First) * q.conj(Second) * q.conj(Third);
    let denom = q * adj;
    adj.scale(1.0 / denom.t)
}

/// Entrywise product-based oracle for the complex parts of `AB`, straight
/// from the scalar multiplication rule.
pub fn naive_mul(a: &CQMatrix, b: &CQMatrix) -> CQMatrix {
    CQMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc = CQuat::ZERO;
        for k in 0..a.cols() {
            let (p, q) = (a[(i, k)], b[(k, j)]);
            acc += CQuat::new(
                p.t * q.t - p.x * q.x + p.y * q.y - p.z * q.z,
                p.x * q.t + p.t * q.x + p.z * q.y + p.y * q.z,
                p.t * q.y + p.y * q.t - p.x * q.z - p.z * q.x,
                p.z * q.t + p.t * q.z + p.x * q.y + p.y * q.x,
            );
        }
        acc
    })
}

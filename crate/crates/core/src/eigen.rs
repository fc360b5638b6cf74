//! Eigenvalues of dense complex matrices.
//!
//! Householder reduction to upper Hessenberg form, then single-shift QR
//! with Wilkinson shifts and Givens rotations. An entry `h[k][k-1]` is
//! deflated once `|h[k][k-1]| < 1e-12 (|h[k][k]| + |h[k-1][k-1]|)`.
//! Eigenvectors come from inverse iteration against the original matrix.

use num_complex::Complex64;

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

/// Largest order accepted by the eigen routines.
pub const MAX_ORDER: usize = 64;

/// Relative deflation threshold on subdiagonal entries.
pub const DEFLATION_TOL: f64 = 1e-12;

/// QR steps allowed per unit of matrix order.
pub const SWEEPS_PER_ORDER: usize = 100;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Reduces a square matrix to upper Hessenberg form by Householder
/// similarity transforms. The result is returned row-major.
pub fn hessenberg(m: &CMatrix) -> Vec<Complex64> {
    let n = m.rows();
    let mut h = m.as_slice().to_vec();
    for k in 0..n.saturating_sub(2) {
        let col: Vec<Complex64> = (k + 1..n).map(|i| h[i * n + k]).collect();
        let alpha = col.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = col[0];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        // v = x + phase·alpha·e1, reflector I - 2vv*/(v*v)
        let mut v = col;
        v[0] += phase * alpha;
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // H <- P H
        for j in 0..n {
            let s: Complex64 = v
                .iter()
                .enumerate()
                .map(|(r, vr)| vr.conj() * h[(k + 1 + r) * n + j])
                .sum();
            let s = s * beta;
            for (r, vr) in v.iter().enumerate() {
                h[(k + 1 + r) * n + j] -= vr * s;
            }
        }
        // H <- H P
        for i in 0..n {
            let s: Complex64 = v
                .iter()
                .enumerate()
                .map(|(r, vr)| h[i * n + k + 1 + r] * vr)
                .sum();
            let s = s * beta;
            for (r, vr) in v.iter().enumerate() {
                h[i * n + k + 1 + r] -= s * vr.conj();
            }
        }
        for i in k + 2..n {
            h[i * n + k] = ZERO;
        }
    }
    h
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mean = (a + d) * 0.5;
    let l1 = mean + disc;
    let l2 = mean - disc;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Givens rotation `G = [[c, s], [-conj(s), c]]` with `G [a; b] = [r; 0]`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, ZERO);
    }
    let r = an.hypot(bn);
    let phase = if an == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        a / an
    };
    (an / r, phase * b.conj() / r)
}

/// One shifted QR step `H - mu I = QR`, `H <- RQ + mu I` on rows and
/// columns `lo..=hi`.
fn qr_step(h: &mut [Complex64], n: usize, lo: usize, hi: usize, mu: Complex64) {
    for k in lo..=hi {
        h[k * n + k] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[k * n + k], h[(k + 1) * n + k]);
        for j in k..=hi {
            let a = h[k * n + j];
            let b = h[(k + 1) * n + j];
            h[k * n + j] = a * c + s * b;
            h[(k + 1) * n + j] = -s.conj() * a + b * c;
        }
        rots.push((c, s));
    }
    for (offset, &(c, s)) in rots.iter().enumerate() {
        let k = lo + offset;
        let last = (k + 2).min(hi);
        for i in lo..=last {
            let a = h[i * n + k];
            let b = h[i * n + k + 1];
            h[i * n + k] = a * c + b * s.conj();
            h[i * n + k + 1] = -a * s + b * c;
        }
    }
    for k in lo..=hi {
        h[k * n + k] += mu;
    }
}

/// All `n` eigenvalues of a square complex matrix, with multiplicity, in
/// the order they deflate.
pub fn complex_eig(m: &CMatrix) -> Result<Vec<Complex64>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            op: "complex_eig",
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = hessenberg(m);
    let scale = m.max_abs();
    let cap = SWEEPS_PER_ORDER * n;
    let mut eigs = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut iterations = 0;
    let mut since_deflation = 0;

    loop {
        if hi == 0 {
            eigs.push(h[0]);
            break;
        }
        // find the start of the unreduced block ending at hi
        let mut lo = hi;
        while lo > 0 {
            let sub = h[lo * n + lo - 1].norm();
            let diag = h[lo * n + lo].norm() + h[(lo - 1) * n + lo - 1].norm();
            let tol = if diag == 0.0 {
                DEFLATION_TOL * scale
            } else {
                DEFLATION_TOL * diag
            };
            if sub == 0.0 || sub < tol {
                h[lo * n + lo - 1] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigs.push(h[hi * n + hi]);
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        if iterations >= cap {
            return Err(Error::NoConvergence {
                iterations,
                unconverged: hi + 1,
                subdiagonal: h[hi * n + hi - 1].norm(),
            });
        }
        since_deflation += 1;
        let mu = if since_deflation % 11 == 0 {
            // exceptional shift to break cycles
            let sub = h[hi * n + hi - 1].norm();
            h[hi * n + hi] + Complex64::new(0.75 * sub, 0.4375 * sub)
        } else {
            wilkinson_shift(
                h[(hi - 1) * n + hi - 1],
                h[(hi - 1) * n + hi],
                h[hi * n + hi - 1],
                h[hi * n + hi],
            )
        };
        qr_step(&mut h, n, lo, hi, mu);
        iterations += 1;
    }
    Ok(eigs)
}

/// Unit (max-norm) eigenvector of `m` for the eigenvalue `lambda` by inverse
/// iteration. `variant` perturbs the starting vector so repeated
/// eigenvalues of a non-defective matrix get distinct vectors.
pub fn inverse_iteration(m: &CMatrix, lambda: Complex64, variant: usize) -> Vec<Complex64> {
    let n = m.rows();
    let scale = m.max_abs().max(lambda.norm()).max(1.0);
    let floor = f64::EPSILON * scale;

    // LU of (m - lambda I) with tiny pivots lifted to `floor`
    let mut a = m.as_slice().to_vec();
    for i in 0..n {
        a[i * n + i] -= lambda;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm()))
            .unwrap_or(k);
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            perm.swap(k, p);
        }
        if a[k * n + k].norm() < floor {
            a[k * n + k] = Complex64::new(floor, 0.0);
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            a[i * n + k] = f;
            for j in k + 1..n {
                let u = a[k * n + j];
                a[i * n + j] -= f * u;
            }
        }
    }
    let solve = |b: &[Complex64]| -> Vec<Complex64> {
        let mut x: Vec<Complex64> = perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for k in 0..i {
                let l = a[i * n + k];
                let xk = x[k];
                x[i] -= l * xk;
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let u = a[i * n + k];
                let xk = x[k];
                x[i] -= u * xk;
            }
            x[i] /= a[i * n + i];
        }
        x
    };

    let mut v: Vec<Complex64> = (0..n)
        .map(|i| {
            let s = ((i + variant) % n) as f64;
            Complex64::new(1.0 + 0.37 * s, 0.11 * s - 0.05 * variant as f64)
        })
        .collect();
    normalize(&mut v);
    for _ in 0..3 {
        v = solve(&v);
        if !normalize(&mut v) {
            break;
        }
    }
    v
}

/// Scales `v` so its largest-modulus entry is 1. Returns false on a zero or
/// non-finite vector.
fn normalize(v: &mut [Complex64]) -> bool {
    let (idx, big) = v
        .iter()
        .enumerate()
        .map(|(i, c)| (i, c.norm()))
        .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
    if big == 0.0 || !big.is_finite() {
        return false;
    }
    let pivot = v[idx];
    for c in v.iter_mut() {
        *c /= pivot;
    }
    true
}
